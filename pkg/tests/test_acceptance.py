"""Acceptance criteria 1 to 10, each timed against its limit.

Every criterion prints one line ``criterion N: PASS|FAIL (elapsed / limit) detail``.
Run directly with ``python tests/test_acceptance.py`` for the lines alone.
"""
from __future__ import annotations

import time

import pytest

from arrowlab import adjunctions as adj
from arrowlab import equivalences as eq
from arrowlab.coend import co_yoneda_integrand, co_yoneda_reduce, stabilization_check
from arrowlab.controls import run_controls
from arrowlab.finset import (
    check_cartesian_isos,
    check_category_laws,
    check_exponentials,
    check_hom_enumeration,
    check_products,
)
from arrowlab.functors import functor_names, inclusion_functor, library_functor, maybe, reader, writer
from arrowlab.monoidal import window_points
from arrowlab.monoids import check_monoid_laws, library_monoid
from arrowlab.profunctors import library_profunctor, profunctor_names

W = 2
PTS = window_points("benabou", W)


def _all(reports):
    bad = [r for r in reports if not r.ok]
    return not bad, (bad[0].summary() if bad else f"{len(reports)} reports")


def criterion_1():
    return _all([c(3) for c in (check_category_laws, check_hom_enumeration, check_products,
                                check_exponentials, check_cartesian_isos)])


def criterion_2():
    cards = []
    for F in (inclusion_functor(), maybe(), reader(2), writer()):
        K = F.max_arity
        for X in range(W + 1):
            space, iso = co_yoneda_reduce(F, X, K)
            if not iso.is_bijective() or iso.cod.card != F.card(X):
                return False, f"{F.name} at X={X}: comparison map is not a bijection onto F X"
            verdict = stabilization_check(co_yoneda_integrand(F, X), K)
            if not verdict.stable:
                return False, f"{F.name} at X={X}: {verdict}"
            cards.append(space.carrier.card)
    return True, f"carriers {cards}"


def criterion_3():
    names = ["maybe-monad", "maybe-idiom", "kleisli-maybe-arrow", "hom-arrow"]
    return _all([check_monoid_laws(library_monoid(n), W) for n in names])


def criterion_4():
    Fs = [library_functor(n) for n in functor_names()]
    Ps = [library_profunctor(n) for n in ("hom", "kleisli-maybe", "cayley-maybe")]
    reports = [adj.check_triangles(adj.cayley_adjunction(), Fs, Ps, W),
               adj.check_triangles(adj.kleisli_adjunction(), Ps, Fs, W)]
    for F in Fs:
        reports.append(adj.check_two_sided_inverse(adj.eta_cayley(F), adj.eta_cayley_inv(F), range(W + 1)))
        reports.append(adj.check_two_sided_inverse(adj.epsilon_kleisli(F), adj.epsilon_kleisli_inv(F), range(W + 1)))
    return _all(reports)


def criterion_5():
    reports = []
    for n in profunctor_names():
        P = library_profunctor(n)
        reports.append(adj.check_bijective(adj.box_comonad(P)[2], PTS, name=f"delta[{n}]"))
        reports.append(adj.check_bijective(adj.diamond_monad(P)[2], PTS, name=f"mu[{n}]"))
    return _all(reports)


def criterion_6():
    M, R = maybe(), reader(2)
    KM, CM = library_profunctor("kleisli-maybe"), library_profunctor("cayley-maybe")
    K = eq.kleisli_monoidal_structure()
    return _all([
        eq.check_structure_bijective(eq.cayley_monoidal_structure(), [(M, M), (M, R)], W),
        eq.check_monoidal_coherence(K, [M], W),
        eq.check_colax_lax(adj.kleisli_adjunction(), eq.hat_opmonoidal_structure(), K, [KM, CM], W),
    ])


def _same_tables(f, g, what):
    for pt in PTS:
        if f.component(pt).table != g.component(pt).table:
            return False, f"{what} differ at {pt}"
    return True, what


def criterion_7():
    T = eq.idiom_to_arrow(library_monoid("maybe-idiom"), W)
    if T.kind != "box":
        return False, "idiom_to_arrow did not produce a box-monoid"
    ok, detail = _all([eq.idiom_round_trip(library_monoid("maybe-idiom"), W)])
    if not ok:
        return ok, detail
    for name in ("kleisli-maybe-arrow", "static-maybe-arrow"):
        A = library_monoid(name)
        ok, detail = _same_tables(eq.force_via_combinators(A), adj.epsilon_cayley(A.carrier), f"force/eps! [{name}]")
        if not ok:
            return ok, detail
    return True, "box-monoid, round trip via eta!, force = eps!"


def criterion_8():
    T = eq.monad_to_arrow(library_monoid("maybe-monad"), W)
    if T.kind != "diamond":
        return False, "monad_to_arrow did not produce a diamond-monoid"
    ok, detail = _all([eq.monad_round_trip(library_monoid("maybe-monad"), W)])
    if not ok:
        return ok, detail
    for name in ("kleisli-maybe-arrow", "static-maybe-arrow", "hom-arrow"):
        A = library_monoid(name)
        ok, detail = _same_tables(eq.eval_via_combinators(A), adj.eta_kleisli(A.carrier), f"eval/eta* [{name}]")
        if not ok:
            return ok, detail
    static = library_monoid("static-maybe-arrow")
    if eq.lave_witness(library_monoid("kleisli-maybe-arrow")) is None:
        return False, "no lave for kleisli-maybe-arrow"
    if eq.lave_witness(static) is not None:
        return False, "lave unexpectedly exists for the static arrow"
    c = eq.eval_via_combinators(static).component((2, 2))
    if (c.dom.card, c.cod.card) != (5, 9):
        return False, f"static eval at (2,2) is {c.dom.card} -> {c.cod.card}"
    return True, "diamond-monoid, round trip via eps*, eval = eta*, lave present / absent (5 vs 9)"


def criterion_9():
    return _all([eq.hat_xi_invertibility(window=W)])


def criterion_10():
    results = run_controls()
    bad = [n for n, r in results.items() if not r.ok]
    return not bad, (f"controls failing: {bad}" if bad else f"{len(results)} controls rejected their broken instance")


CRITERIA = [
    (1, criterion_1, 5.0),
    (2, criterion_2, 10.0),
    (3, criterion_3, 30.0),
    (4, criterion_4, 20.0),
    (5, criterion_5, 10.0),
    (6, criterion_6, 30.0),
    (7, criterion_7, 20.0),
    (8, criterion_8, 20.0),
    (9, criterion_9, 10.0),
    (10, criterion_10, 10.0),
]


def evaluate(fn, limit):
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as e:  # an exception is a failure of the criterion, reported as such
        ok, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - t0
    if ok and elapsed >= limit:
        ok, detail = False, f"too slow: {detail}"
    return ok, elapsed, detail


def line(n, ok, elapsed, limit, detail):
    return f"criterion {n}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s / {limit:.0f}s) {detail}"


@pytest.mark.parametrize("n,fn,limit", CRITERIA, ids=[f"criterion-{c[0]}" for c in CRITERIA])
def test_criterion(n, fn, limit, capsys):
    ok, elapsed, detail = evaluate(fn, limit)
    with capsys.disabled():
        print("\n" + line(n, ok, elapsed, limit, detail))
    assert ok, detail


if __name__ == "__main__":
    for n, fn, limit in CRITERIA:
        ok, elapsed, detail = evaluate(fn, limit)
        print(line(n, ok, elapsed, limit, detail))
