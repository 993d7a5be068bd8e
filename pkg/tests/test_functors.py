from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowlab.errors import UnknownNameError
from arrowlab.finset import FinFun, FinSet, enum_hom
from arrowlab.functors import (
    ComposeFunctor,
    CustomFunctor,
    PolyFunctor,
    SumFunctor,
    canonical_strength,
    check_functor_laws,
    check_naturality,
    check_strength_naturality,
    extend_by_yoneda,
    functor_names,
    inclusion_functor,
    library_functor,
    maybe,
    nothing,
    power,
    reader,
    writer,
)
from arrowlab.nat import Nat


def maybe_oracle(f: FinFun, x: int) -> int:
    """Maybe by hand: Just a is a, Nothing is |X|."""
    return f.cod.card if x == f.dom.card else f(x)


def test_library_names():
    assert functor_names() == ["maybe", "reader2", "writer-or2", "identity"]
    with pytest.raises(UnknownNameError):
        library_functor("list")


def test_cardinalities():
    M, R, W, I = maybe(), reader(2), writer(), inclusion_functor()
    assert [M.card(n) for n in range(4)] == [1, 2, 3, 4]
    assert [R.card(n) for n in range(4)] == [0, 1, 4, 9]
    assert [W.card(n) for n in range(4)] == [0, 2, 4, 6]
    assert [I.card(n) for n in range(4)] == [0, 1, 2, 3]
    assert nothing(3) == 3


def test_maybe_matches_oracle():
    M = maybe()
    for a in range(4):
        for b in range(1, 4):
            for f in enum_hom(a, b):
                assert [M.fmap(f, x) for x in range(a + 1)] == [maybe_oracle(f, x) for x in range(a + 1)]


def test_writer_layout():
    # element (w, x) sits at w * |X| + x and F f keeps the log
    W = writer()
    f = FinFun(FinSet(2), FinSet(3), (2, 0))
    assert W.fmap(f, 1 * 2 + 0) == 1 * 3 + 2


def test_reader_acts_by_postcomposition():
    R = reader(2)
    f = FinFun(FinSet(2), FinSet(2), (1, 0))
    # the pair (0, 1) has code 1 and becomes (1, 0) with code 2
    assert R.fmap(f, 1) == 2


def test_generic_elements():
    M = maybe()
    assert M.generic(0) == (1, 0)  # Just 0 in Maybe 1
    assert M.generic(1) == (0, 0)  # Nothing in Maybe 0


@given(st.integers(0, 3), st.data())
def test_decompose_compose_roundtrip(n, data):
    for F in (maybe(), reader(2), writer()):
        if F.card(n) == 0:
            continue
        x = data.draw(st.integers(0, F.card(n) - 1))
        sid, args = F.decompose(n, x)
        assert F.compose(sid, args, n) == x


def test_composite_and_sum_cardinalities():
    M, R = maybe(), reader(2)
    assert [ComposeFunctor(M, R).card(n) for n in range(3)] == [1, 2, 5]
    assert [ComposeFunctor(R, M).card(n) for n in range(3)] == [1, 4, 9]
    assert [SumFunctor([M, power(2)]).card(n) for n in range(3)] == [1, 3, 7]
    assert [power(3).card(n) for n in range(3)] == [0, 1, 8]


@pytest.mark.parametrize("name", ["maybe", "reader2", "writer-or2", "identity"])
def test_library_functor_laws(name):
    F = library_functor(name)
    assert check_functor_laws(F, 3).ok
    assert check_strength_naturality(F, 2).ok


def test_composite_functor_laws():
    assert check_functor_laws(ComposeFunctor(maybe(), reader(2)), 2).ok
    assert check_functor_laws(SumFunctor([maybe(), writer()]), 2).ok


def test_strength_at_one_is_bijective():
    for name in functor_names():
        F = library_functor(name)
        for A in range(3):
            assert canonical_strength(F, A, 1).is_bijective()


def test_strength_example():
    # sigma : Maybe 1 x 2 -> Maybe 2, (Just 0, b) |-> Just b, (Nothing, b) |-> Nothing
    assert canonical_strength(maybe(), 1, 2).table == (0, 1, 2, 2)


def test_yoneda_extension_gives_just():
    # the natural transformation identity -> Maybe fixed by Just on the generic element
    tau = extend_by_yoneda(inclusion_functor(), maybe(), [0], name="just")
    assert tau.component(3).table == (0, 1, 2)
    assert check_naturality(tau, 2).ok


def test_naturality_rejects_non_natural():
    M = maybe()
    bad = Nat(M, M, lambda X, x: 0 if x < X else x, name="just-zero")
    report = check_naturality(bad, 2)
    assert not report.ok and report.counterexample


def test_broken_functor_rejected():
    swap = CustomFunctor(lambda n: n, lambda f, x: (1 - f(x)) if f.cod.card == 2 else f(x), name="bad")
    report = check_functor_laws(swap, 2)
    assert not report.ok
    assert "F(id_2)" in report.counterexample


def test_poly_constructor_validation():
    with pytest.raises(ValueError):
        PolyFunctor([("bad", -1)])
