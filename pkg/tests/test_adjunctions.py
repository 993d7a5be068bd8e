from __future__ import annotations

import pytest

from arrowlab.adjunctions import (
    box,
    box_comonad,
    cayley,
    cayley_adjunction,
    check_bijective,
    check_triangles,
    check_two_sided_inverse,
    diamond,
    diamond_monad,
    epsilon_cayley,
    epsilon_kleisli,
    epsilon_kleisli_inv,
    eta_cayley,
    eta_cayley_inv,
    eta_kleisli,
    full_faithfulness_probe,
    hat,
    hat_faithfulness_search,
    kleisli,
    kleisli_adjunction,
    natural_transformations,
    require_iso,
)
from arrowlab.errors import NotInvertibleError
from arrowlab.finset import decode, encode
from arrowlab.functors import check_naturality, functor_names, library_functor, maybe, reader, writer
from arrowlab.profunctors import check_strength_laws, check_strong_naturality, library_profunctor, profunctor_names

FUNCTORS = [library_functor(n) for n in functor_names()]
PROFS = [library_profunctor(n) for n in profunctor_names()]
PPTS = [(X, Y) for X in range(3) for Y in range(3)]


def test_hat_is_the_row_at_one():
    K = library_profunctor("kleisli-maybe")
    H = hat(K)
    assert [H.card(n) for n in range(4)] == [1, 2, 3, 4]
    assert H.max_arity == 1


def test_cayley_and_kleisli_cardinalities():
    M = maybe()
    assert cayley(M).card(2, 2) == 5  # Maybe(2^2)
    assert kleisli(M).card(2, 2) == 9  # (Maybe 2)^2
    assert cayley(reader(2)).card(1, 2) == 4


def test_triangles():
    assert check_triangles(cayley_adjunction(), FUNCTORS, PROFS[:3], 2).ok
    assert check_triangles(kleisli_adjunction(), PROFS[:3], FUNCTORS, 2).ok


def test_eta_cayley_on_maybe():
    # Maybe 2 -> Maybe(2^1): a point of 2 is a map 1 -> 2 with the same code, so indices are kept
    assert eta_cayley(maybe()).component(2).table == (0, 1, 2)


@pytest.mark.parametrize("F", FUNCTORS, ids=lambda F: F.name)
def test_unit_and_counit_isos(F):
    pts = range(3)
    assert check_two_sided_inverse(eta_cayley(F), eta_cayley_inv(F), pts).ok
    assert check_two_sided_inverse(epsilon_kleisli(F), epsilon_kleisli_inv(F), pts).ok
    assert check_naturality(eta_cayley(F), 2).ok
    assert check_naturality(epsilon_kleisli(F), 2).ok


def test_epsilon_cayley_on_kleisli_maybe():
    e = epsilon_cayley(library_profunctor("kleisli-maybe")).component((2, 2))
    assert (e.dom.card, e.cod.card) == (5, 9)
    assert e.is_injective() and not e.is_surjective()
    # Nothing goes to the constantly-Nothing map; Just h goes to Just . h
    assert e.table[4] == encode([2, 2], 3)
    image = {decode(v, 2, 3) for v in e.table}
    assert (0, 2) not in image  # a map that fails on one input is not in the image


def test_eta_kleisli_is_bijective_on_kleisli_maybe():
    h = eta_kleisli(library_profunctor("kleisli-maybe")).component((2, 2))
    assert h.is_bijective() and h.dom.card == 9


def test_box_diamond_cardinalities():
    cards = {P.name: (box(P).card(2, 2), diamond(P).card(2, 2)) for P in PROFS}
    assert cards == {"hom": (4, 4), "kleisli-maybe": (5, 9), "cayley-maybe": (5, 9), "cayley-writer-or2": (8, 16)}


@pytest.mark.parametrize("P", PROFS, ids=lambda P: P.name)
def test_idempotency(P):
    _, _, delta = box_comonad(P)
    _, _, mu = diamond_monad(P)
    assert check_bijective(delta, PPTS).ok
    assert check_bijective(mu, PPTS).ok


@pytest.mark.parametrize("P", PROFS, ids=lambda P: P.name)
def test_box_and_diamond_are_strong(P):
    assert check_strength_laws(box(P), 2).ok
    assert check_strength_laws(diamond(P), 2).ok
    assert check_strong_naturality(epsilon_cayley(P), 2).ok
    assert check_strong_naturality(eta_kleisli(P), 2).ok


def test_natural_transformation_counts():
    # Maybe -> Maybe: Just x |-> Just x or Nothing, so two; identity -> Reader2: the diagonal only
    nats, brute = natural_transformations(maybe(), maybe(), 2)
    assert len(nats) == brute == 2
    nats, _ = natural_transformations(library_functor("identity"), reader(2), 2)
    assert len(nats) == 1
    nats, _ = natural_transformations(writer(), writer(), 1)
    assert len(nats) == 4


@pytest.mark.parametrize("which", ["cayley", "kleisli"])
def test_full_faithfulness(which):
    assert full_faithfulness_probe(which, window=2).ok


def test_full_faithfulness_rejects_bad_name():
    with pytest.raises(ValueError):
        full_faithfulness_probe("hat")


def test_hat_is_not_faithful():
    report = hat_faithfulness_search(window=2)
    assert report.witness == ("precompose-id", "precompose-diag")


def test_require_iso():
    require_iso(eta_kleisli(library_profunctor("kleisli-maybe")), PPTS)
    with pytest.raises(NotInvertibleError):
        require_iso(epsilon_cayley(library_profunctor("kleisli-maybe")), PPTS)
