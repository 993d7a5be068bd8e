from __future__ import annotations

import pytest

from arrowlab.errors import NotInvertibleError, TagMismatchError
from arrowlab.functors import inclusion_functor, maybe, reader, writer
from arrowlab.monoidal import (
    BenabouTensor,
    DayTensor,
    MonoidalTag,
    Structure,
    SubstTensor,
    check_iso_pair,
    check_pentagon,
    check_structural_isos,
    check_triangle,
    require_bijective,
    same_tag,
    unit_object,
    window_points,
)
from arrowlab.monoids import library_monoid
from arrowlab.nat import Nat
from arrowlab.profunctors import check_profunctor_laws, check_strength_laws, hom_prof, library_profunctor

# cardinalities by hand: Maybe = 1 + y, Reader2 = y^2, Writer = 2y.
# Day multiplies exponents (y^A * y^B = y^(A x B)); substitution substitutes.


def test_day_cardinalities():
    M, R, W = maybe(), reader(2), writer()
    assert [DayTensor(M, M).size(x) for x in range(4)] == [3, 4, 5, 6]  # 3 + y
    assert [DayTensor(M, R).size(x) for x in range(4)] == [1, 2, 5, 10]  # 1 + y^2
    assert [DayTensor(R, R).size(x) for x in range(4)] == [0, 1, 16, 81]  # y^4
    assert [DayTensor(W, W).size(x) for x in range(4)] == [0, 4, 8, 12]  # 4y


def test_subst_cardinalities():
    M, R = maybe(), reader(2)
    assert [SubstTensor(M, M).size(x) for x in range(4)] == [2, 3, 4, 5]  # 2 + y
    assert [SubstTensor(M, R).size(x) for x in range(4)] == [1, 2, 5, 10]
    assert [SubstTensor(R, M).size(x) for x in range(3)] == [1, 4, 9]  # (1 + y)^2


def test_benabou_cardinalities():
    K = library_profunctor("kleisli-maybe")
    KK = BenabouTensor(K, K)
    # Kleisli of Maybe composed with itself is X -> Maybe (Maybe Y)
    assert [[KK.card(x, y) for y in range(3)] for x in range(3)] == [[1, 1, 1], [2, 3, 4], [4, 9, 16]]
    HK = BenabouTensor(hom_prof(), K)
    assert [[HK.card(x, y) for y in range(3)] for x in range(3)] == [[(y + 1) ** x for y in range(3)] for x in range(3)]


def test_units():
    assert unit_object("day").name == "identity" and unit_object(MonoidalTag.SUBST).name == "identity"
    assert unit_object("benabou").name == "hom"
    assert window_points("day", 2) == [0, 1, 2]
    assert len(window_points("benabou", 1)) == 4


@pytest.mark.parametrize("tag", ["day", "subst"])
def test_functor_structural_isos(tag):
    st = Structure(tag)
    assert check_structural_isos(st, [maybe()], 2).ok
    # triples mixing in Reader2 grow quickly, so probe them at sizes up to 1
    assert check_structural_isos(st, [maybe(), reader(2)], 1).ok
    assert check_triangle(st, maybe(), reader(2), 2).ok
    assert check_pentagon(st, maybe(), maybe(), maybe(), maybe(), 1).ok


def test_unitors_on_writer():
    for tag in ("day", "subst"):
        st = Structure(tag)
        W = writer()
        assert check_iso_pair(st.lam(W), st.lam_inv(W), st.points(2)).ok
        assert check_iso_pair(st.rho(W), st.rho_inv(W), st.points(2)).ok


def test_benabou_structure():
    st = Structure("benabou")
    K = library_profunctor("kleisli-maybe")
    assert check_structural_isos(st, [K], 1).ok
    assert check_triangle(st, K, K, 1).ok
    assert check_pentagon(st, K, K, K, K, 1).ok


def test_benabou_tensor_is_strong_profunctor():
    K = library_profunctor("kleisli-maybe")
    C = library_profunctor("cayley-maybe")
    T = BenabouTensor(K, C)
    assert check_profunctor_laws(T, 1).ok
    assert check_strength_laws(T, 1).ok


def test_require_bijective():
    I = inclusion_functor()
    require_bijective(Nat(I, I, lambda X, x: x), range(3))
    with pytest.raises(NotInvertibleError):
        require_bijective(Nat(I, I, lambda X, x: 0), range(3))


def test_tag_mismatch():
    with pytest.raises(TagMismatchError):
        same_tag(library_monoid("maybe-monad"), library_monoid("maybe-idiom"))
