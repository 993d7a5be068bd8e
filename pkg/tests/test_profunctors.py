from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrowlab.errors import UnknownNameError
from arrowlab.finset import FinFun, FinSet, decode, encode, enum_hom
from arrowlab.functors import maybe
from arrowlab.profunctors import (
    CorruptedStrength,
    DiagonalHom,
    KleisliMaybeHand,
    KleisliProf,
    ZPermutedStrength,
    check_prof_naturality,
    check_profunctor_laws,
    check_strength_laws,
    check_strong_naturality,
    diagonal_swap,
    hom_prof,
    hom_times_id,
    identity_prof_nat,
    library_profunctor,
    profunctor_names,
    sigma_strength,
    sigma_strength_covariant,
    varsigma_strength,
)

NAMES = ["hom", "kleisli-maybe", "cayley-maybe", "cayley-writer-or2"]


def test_names():
    assert profunctor_names() == NAMES
    with pytest.raises(UnknownNameError):
        library_profunctor("state")


def test_cardinalities():
    card = lambda n, X, Y: library_profunctor(n).card(X, Y)
    assert card("hom", 2, 3) == 9
    assert card("kleisli-maybe", 2, 2) == 9  # (Y+1)^X
    assert card("cayley-maybe", 2, 2) == 5  # Maybe(Y^X)
    assert card("cayley-writer-or2", 2, 2) == 8  # 2 x Y^X
    assert card("hom", 0, 0) == 1 and card("kleisli-maybe", 0, 5) == 1


def test_hom_strength_example():
    # h = swap on 2, Z = 2: (x, z) |-> (h x, z) is [2, 3, 0, 1]
    assert decode(hom_times_id(encode([1, 0], 2), 2, 2, 2), 4, 4) == (2, 3, 0, 1)


def test_hom_lmap_is_precomposition():
    H = hom_prof()
    f = FinFun(FinSet(3), FinSet(2), (1, 1, 0))
    h = encode([0, 2], 3)
    assert decode(H.lmap(f, 3, h), 3, 3) == (2, 2, 0)


@pytest.mark.parametrize("name", NAMES)
def test_library_laws(name):
    P = library_profunctor(name)
    assert check_profunctor_laws(P, 2).ok
    assert check_strength_laws(P, 2).ok
    assert check_prof_naturality(identity_prof_nat(P), 2).ok


def test_hand_written_kleisli_maybe_agrees():
    hand, gen = KleisliMaybeHand(), KleisliProf(maybe())
    for X in range(3):
        for Y in range(3):
            assert hand.card(X, Y) == gen.card(X, Y)
            for p in range(hand.card(X, Y)):
                for Xp in range(3):
                    for f in enum_hom(Xp, X):
                        assert hand.lmap(f, Y, p) == gen.lmap(f, Y, p)
                for Yp in range(3):
                    for g in enum_hom(Y, Yp):
                        assert hand.rmap(X, g, p) == gen.rmap(X, g, p)
                for Z in range(3):
                    assert hand.strength(X, Y, Z, p) == gen.strength(X, Y, Z, p)


@pytest.mark.parametrize("name", NAMES)
def test_strengths_at_one(name):
    P = library_profunctor(name)
    for X in range(3):
        for Y in range(3):
            assert P.strength_map(X, Y, 1).is_bijective()
            assert sigma_strength(P, X, Y, 1).is_bijective()
            assert sigma_strength_covariant(P, X, Y, 1).is_bijective()
            assert varsigma_strength(P, 1, X, Y).is_bijective()


def test_sigma_ignores_z():
    P = hom_prof()
    s = sigma_strength(P, 1, 2, 3)
    # both elements of 1 -> 2, paired with each z, pull back along pi_1 to the same function
    assert s.table == (0, 0, 0, 7, 7, 7)  # constant 0 and constant 1 on 3


@pytest.mark.parametrize("wrap", [CorruptedStrength, ZPermutedStrength])
def test_corrupted_strength_rejected(wrap):
    report = check_strength_laws(wrap(library_profunctor("kleisli-maybe")), 2)
    assert not report.ok
    assert "(X,Y,Z)" in report.counterexample or "X=" in report.counterexample


def test_corrupted_keeps_profunctor_laws():
    assert check_profunctor_laws(CorruptedStrength(hom_prof()), 2).ok


def test_diagonal_swap_is_natural_not_strong():
    D = DiagonalHom()
    assert check_profunctor_laws(D, 2).ok
    assert check_strength_laws(D, 2).ok
    tau = diagonal_swap()
    assert check_prof_naturality(tau, 2).ok
    report = check_strong_naturality(tau, 2)
    assert not report.ok and report.counterexample


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.data())
def test_dimap_interchange(X, Y, Y2, data):
    P = library_profunctor(data.draw(st.sampled_from(NAMES)))
    Xp = data.draw(st.integers(0, 2))
    fs, gs = enum_hom(Xp, X), enum_hom(Y, Y2)
    if not fs or not gs or not P.card(X, Y):
        return
    f = data.draw(st.sampled_from(fs))
    g = data.draw(st.sampled_from(gs))
    p = data.draw(st.integers(0, P.card(X, Y) - 1))
    assert P.dimap(f, g, p) == P.lmap(f, Y2, P.rmap(X, g, p))
