from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrowlab.coend import (
    YonedaCoend,
    check_determinism,
    check_universal_property,
    co_yoneda_integrand,
    co_yoneda_reduce,
    compute_coend,
    constant_contra,
    cross_check,
    factorize,
    hom_into,
    inject,
    stabilization_check,
)
from arrowlab.errors import BoundError, CoendSizeError, DinaturalityError, IndexRangeError
from arrowlab.finset import encode
from arrowlab.functors import inclusion_functor, maybe, reader, writer

# |coend F W x (W -> X)| is |F X|, written out by hand
ORACLE = {
    "identity": lambda X: X,
    "maybe": lambda X: X + 1,
    "reader2": lambda X: X * X,
    "writer-or2": lambda X: 2 * X,
}
FUNCTORS = {"identity": inclusion_functor, "maybe": maybe, "reader2": lambda: reader(2), "writer-or2": writer}


@pytest.mark.parametrize("name", sorted(ORACLE))
@pytest.mark.parametrize("X", [0, 1, 2])
def test_co_yoneda_cardinality(name, X):
    F = FUNCTORS[name]()
    space, iso = co_yoneda_reduce(F, X, F.max_arity)
    assert space.carrier.card == ORACLE[name](X)
    assert iso.is_bijective()


def test_inject_identifies_along_maps():
    # Maybe at X = 2: (Just 0, k = [1]) at W = 1 and (Just 1, id) at W = 2 both name Just 1
    M = maybe()
    H = co_yoneda_integrand(M, 2)
    space = compute_coend(H, 2)
    left = H.index(1, 0, encode([1], 2))
    right = H.index(2, 1, encode([0, 1], 2))
    assert inject(space, 1, left) == inject(space, 2, right)
    # Just 0 and Just 1 stay apart
    assert inject(space, 2, H.index(2, 0, encode([0, 1], 2))) != inject(space, 2, right)
    # every Nothing is one class, including the one at W = 0
    nothing = {inject(space, w, H.index(w, w, k)) for w in range(3) for k in range(2**w)}
    assert len(nothing) == 1


def test_inject_is_strict():
    space = compute_coend(co_yoneda_integrand(maybe(), 1), 2)
    with pytest.raises(BoundError):
        inject(space, 3, 0)
    with pytest.raises(IndexRangeError):
        inject(space, 1, 99)
    # class_of still reaches past the bound through the shape decomposition
    H = space.H
    assert space.class_of(3, H.index(3, 3, 0)) == space.class_of(0, H.index(0, 0, 0))


def test_reader_not_stable_below_arity():
    H = co_yoneda_integrand(reader(2), 2)
    v = stabilization_check(H, 1)
    assert not v.stable
    assert (v.card_at_bound, v.card_at_next) == (2, 4)
    assert str(v) == "not stable at K=1: 2 classes vs 4 at K=2"
    assert stabilization_check(H, 2).stable


def test_reduce_refuses_small_bound():
    with pytest.raises(BoundError, match="maximal arity"):
        co_yoneda_reduce(reader(2), 2, 1)


def test_size_cap():
    with pytest.raises(CoendSizeError) as info:
        compute_coend(co_yoneda_integrand(reader(2), 3), 3, cap=10)
    assert info.value.cap == 10 and info.value.generators > 10


def test_non_dinatural_wedge_rejected():
    space = compute_coend(co_yoneda_integrand(maybe(), 1), 2)
    with pytest.raises(DinaturalityError) as info:
        factorize(space, lambda w, x: w, 3)
    assert info.value.witness is not None


def test_generating_relations_match_all():
    for F in (maybe(), reader(2), writer()):
        H = co_yoneda_integrand(F, 2)
        a = compute_coend(H, 2, relations="all")
        b = compute_coend(H, 2, relations="generating")
        assert a.reps == b.reps
        assert b.relation_count < a.relation_count
        assert a.verify() and b.verify()


@pytest.mark.parametrize("mk", [maybe, lambda: reader(2), writer])
def test_normal_form_agrees_with_union_find(mk):
    F = mk()
    for X in range(3):
        yc = YonedaCoend(F, hom_into(X), bound=2)
        assert yc.verify()
        assert cross_check(yc).ok


def test_normal_form_with_constant_contra():
    # coend of F W x 1 counts the shapes of F
    yc = YonedaCoend(writer(), constant_contra(1), bound=1)
    assert yc.carrier.card == 2


def test_determinism_and_universal_property():
    H = co_yoneda_integrand(maybe(), 1)
    assert check_determinism(H, 2).ok
    space = compute_coend(H, 2)
    # the wedge "is it Nothing" is dinatural
    wedge = lambda w, x: int(H.split(w, x)[0] == w)
    assert check_universal_property(space, wedge, 2).ok


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2), st.data())
def test_evaluation_commutes_with_injection(X, data):
    F = maybe()
    space, iso = co_yoneda_reduce(F, X, 1)
    H = space.H
    w = data.draw(st.integers(0, 1))
    x = data.draw(st.integers(0, H.card(w, w) - 1)) if H.card(w, w) else None
    if x is None:
        return
    a, k = H.split(w, x)
    # by hand: Nothing stays Nothing, Just 0 at W = 1 goes to Just k(0), whose code is k
    expected = X if a == w else k
    assert iso(inject(space, w, x)) == expected
