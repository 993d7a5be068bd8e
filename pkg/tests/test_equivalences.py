from __future__ import annotations

import pytest

from arrowlab.adjunctions import epsilon_cayley, eta_kleisli, kleisli_adjunction
from arrowlab.equivalences import (
    ArrowOps,
    arrow_to_idiom,
    arrow_to_monad,
    box_image_criterion,
    box_round_trip,
    cayley_monoidal_structure,
    cayley_phi,
    cayley_phi_inv,
    check_colax_lax,
    check_monoidal_coherence,
    check_structure_bijective,
    compare_monoids,
    diamond_round_trip,
    eval_via_combinators,
    force_via_combinators,
    hat_monoidal_structure,
    hat_opmonoidal_structure,
    hat_xi_invertibility,
    idiom_round_trip,
    idiom_to_arrow,
    kleisli_monoidal_structure,
    kleisli_xi,
    kleisli_xi0,
    lave_witness,
    lift_monoid,
    monad_round_trip,
    monad_to_arrow,
    t_monoid,
    xi_surjectivity_search,
)
from arrowlab.errors import NotInvertibleError
from arrowlab.finset import FinFun, FinSet, decode, encode
from arrowlab.functors import maybe, reader
from arrowlab.monoidal import check_iso_pair, window_points
from arrowlab.monoids import library_monoid, trivial_monoid
from arrowlab.profunctors import library_profunctor

PTS = window_points("benabou", 2)
lib = library_monoid


def test_cayley_is_strong():
    M, R = maybe(), reader(2)
    assert check_structure_bijective(cayley_monoidal_structure(), [(M, M), (M, R)], 2).ok
    assert check_iso_pair(cayley_phi(M, M), cayley_phi_inv(M, M), PTS).ok


def test_kleisli_xi_on_the_window():
    # p : X -> Maybe W and q : W -> Maybe Y go to x |-> Maybe-map q over p(x); on the window this is a bijection
    xi = kleisli_xi(maybe(), maybe())
    for pt in PTS:
        assert xi.component(pt).is_bijective()
    assert kleisli_xi0().component((2, 2)).table == tuple(range(4))


def test_eta_star_on_cayley_maybe():
    c = eta_kleisli(library_profunctor("cayley-maybe")).component((2, 2))
    assert (c.dom.card, c.cod.card) == (5, 9)
    assert c.is_injective() and not c.is_surjective()


def test_xi_surjectivity_search_records_absence():
    report = xi_surjectivity_search(window=2)
    assert report.ok and report.witness is None


def test_coherence():
    M, KM = maybe(), library_profunctor("kleisli-maybe")
    assert check_monoidal_coherence(cayley_monoidal_structure(), [M], 2).ok
    assert check_monoidal_coherence(kleisli_monoidal_structure(), [M], 2).ok
    assert check_monoidal_coherence(hat_monoidal_structure(), [KM], 2).ok
    assert check_monoidal_coherence(hat_opmonoidal_structure(), [KM], 2).ok


def test_colax_lax():
    objs = [library_profunctor("kleisli-maybe"), library_profunctor("cayley-maybe")]
    assert check_colax_lax(kleisli_adjunction(), hat_opmonoidal_structure(), kleisli_monoidal_structure(), objs, 2).ok


def test_lifts_match_hand_written_arrows():
    assert compare_monoids(lift_monoid(cayley_monoidal_structure(), lib("maybe-idiom")), lib("static-maybe-arrow")).ok
    assert compare_monoids(lift_monoid(kleisli_monoidal_structure(), lib("maybe-monad")), lib("kleisli-maybe-arrow")).ok


def test_lift_requires_lax_and_matching_tag():
    with pytest.raises(ValueError):
        lift_monoid(cayley_monoidal_structure(), lib("maybe-monad"))
    with pytest.raises(ValueError):
        lift_monoid(hat_opmonoidal_structure(), lib("hom-arrow"))


@pytest.mark.parametrize("name,aw", [("maybe-idiom", None), ("writer-or2-idiom", None), ("reader2-idiom", 1)])
def test_idiom_round_trip(name, aw):
    report = idiom_round_trip(lib(name), 2, arrow_window=aw)
    assert report.ok, report.summary()


@pytest.mark.parametrize("name,aw", [("maybe-monad", None), ("writer-or2-monad", None), ("reader2-monad", 1)])
def test_monad_round_trip(name, aw):
    report = monad_round_trip(lib(name), 2, arrow_window=aw)
    assert report.ok, report.summary()


def test_trivial_round_trips():
    assert idiom_round_trip(trivial_monoid("day"), 2).ok
    assert monad_round_trip(trivial_monoid("subst"), 2).ok


def test_arrow_round_trips():
    assert box_round_trip(lib("static-maybe-arrow"), 2).ok
    assert diamond_round_trip(lib("kleisli-maybe-arrow"), 2).ok


def test_arrow_to_monad_recovers_maybe():
    back = arrow_to_monad(t_monoid(lib("kleisli-maybe-arrow"), "diamond"))
    assert compare_monoids(back, lib("maybe-monad")).ok
    assert compare_monoids(arrow_to_monad(t_monoid(lib("hom-arrow"), "diamond")), trivial_monoid("subst")).ok


def test_static_writer_is_not_a_diamond_monoid():
    with pytest.raises(NotInvertibleError, match="not invertible"):
        t_monoid(lib("static-writer-or2-arrow"), "diamond")


def test_kleisli_arrow_is_not_a_box_monoid():
    with pytest.raises(NotInvertibleError):
        t_monoid(lib("kleisli-maybe-arrow"), "box")
    assert box_image_criterion(lib("kleisli-maybe-arrow")).ok


def test_kind_checks():
    T = idiom_to_arrow(lib("maybe-idiom"))
    assert T.kind == "box"
    with pytest.raises(ValueError):
        arrow_to_monad(T)
    D = monad_to_arrow(lib("maybe-monad"))
    with pytest.raises(ValueError):
        arrow_to_idiom(D)
    with pytest.raises(ValueError):
        t_monoid(lib("hom-arrow"), "triangle")


def test_arrow_combinators_by_hand():
    ops = ArrowOps(lib("kleisli-maybe-arrow"))
    swap = FinFun(FinSet(2), FinSet(2), (1, 0))
    p = ops.arr(2, 2, swap)
    assert decode(p, 2, 3) == (1, 0)
    q = encode([2, 0], 3)  # 0 |-> Nothing, 1 |-> Just 0
    assert decode(ops.seq(2, 2, 2, p, q), 2, 3) == (0, 2)
    with pytest.raises(ValueError):
        ArrowOps(lib("maybe-monad"))


@pytest.mark.parametrize("name", ["kleisli-maybe-arrow", "static-maybe-arrow", "hom-arrow"])
def test_force_is_epsilon(name):
    A = lib(name)
    f, e = force_via_combinators(A), epsilon_cayley(A.carrier)
    for pt in PTS:
        assert f.component(pt).table == e.component(pt).table


@pytest.mark.parametrize("name", ["kleisli-maybe-arrow", "static-maybe-arrow", "hom-arrow"])
def test_eval_is_eta(name):
    A = lib(name)
    g, h = eval_via_combinators(A), eta_kleisli(A.carrier)
    for pt in PTS:
        assert g.component(pt).table == h.component(pt).table


def test_lave():
    assert lave_witness(lib("kleisli-maybe-arrow")) is not None
    assert lave_witness(lib("hom-arrow")) is not None
    assert lave_witness(lib("static-maybe-arrow")) is None
    c = eval_via_combinators(lib("static-maybe-arrow")).component((2, 2))
    assert (c.dom.card, c.cod.card) == (5, 9)


def test_hat_xi_invertibility():
    assert hat_xi_invertibility(window=2).ok
