"""Negative controls: a deliberately broken instance for every law checker.

A control passes when its checker rejects the broken instance and reports a
concrete counterexample.
"""
from __future__ import annotations

from dataclasses import replace

from .adjunctions import cayley_adjunction, check_triangles, check_two_sided_inverse, eta_cayley, eta_cayley_inv
from .coend import co_yoneda_integrand, compute_coend, factorize
from .errors import DinaturalityError
from .functors import CustomFunctor, check_functor_laws, check_naturality, maybe
from .monoidal import MonoidalTag, Structure, check_iso_pair, check_pentagon, check_structural_isos, check_triangle
from .monoids import check_monoid_laws, check_monoid_morphism, corrupted_monoid, library_monoid
from .nat import Nat, point_card
from .profunctors import (
    CorruptedStrength,
    ProfRep,
    check_prof_naturality,
    check_profunctor_laws,
    check_strength_laws,
    check_strong_naturality,
    diagonal_swap,
    hom_prof,
    library_profunctor,
)
from .reports import Report


def _swap01(v: int) -> int:
    return 1 if v == 0 else 0 if v == 1 else v


def swapped(nat: Nat, name: str = None) -> Nat:
    """``nat`` followed by exchanging output elements 0 and 1 wherever the target has both."""
    def fn(pt, x):
        v = nat.fn(pt, x)
        return _swap01(v) if point_card(nat.target, pt) >= 2 else v

    return Nat(nat.source, nat.target, fn, name=name or f"swapped({nat.name})")


def broken_functor() -> CustomFunctor:
    """``X |-> X`` acting by ``f`` followed by a swap, so ``F(id) != id`` once ``X >= 2``."""
    def fmap(f, x):
        v = f(x)
        return _swap01(v) if f.cod.card >= 2 else v

    return CustomFunctor(lambda n: n, fmap, name="broken-identity")


class BrokenAction(ProfRep):
    """``P`` whose contravariant action is followed by a swap of elements 0 and 1."""

    def __init__(self, P: ProfRep):
        self.P = P
        self.name = f"broken-action({P.name})"

    def row(self, X):
        return self.P.row(X)

    def card(self, X, Y):
        return self.P.card(X, Y)

    def lmap(self, f, Y, p):
        v = self.P.lmap(f, Y, p)
        return _swap01(v) if self.P.card(f.dom.card, Y) >= 2 else v

    def rmap(self, X, g, p):
        return self.P.rmap(X, g, p)

    def strength(self, X, Y, Z, p):
        return self.P.strength(X, Y, Z, p)


class BrokenAlpha(Structure):
    """A monoidal structure whose associator is followed by a swap."""

    def alpha(self, A, B, C):
        return swapped(super().alpha(A, B, C))


def _expect_failure(name: str, report: Report) -> Report:
    out = Report(f"control [{name}]")
    out.checked = 1
    if report.ok:
        out.fail(f"{report.name} accepted the broken instance")
    elif not report.counterexample:
        out.fail(f"{report.name} rejected the broken instance without a counterexample")
    else:
        out.note(report.counterexample)
    return out


def _expect_raise(name: str, thunk, exc) -> Report:
    out = Report(f"control [{name}]")
    out.checked = 1
    try:
        thunk()
    except exc as e:
        out.note(str(e))
        if not str(e):
            out.fail("raised without a message")
        return out
    out.fail(f"no {exc.__name__} raised")
    return out


def control_functor_laws(window=2):
    return _expect_failure("functor laws", check_functor_laws(broken_functor(), window))


def control_naturality(window=2):
    M = maybe()
    bad = Nat(M, M, lambda X, x: 0 if x < X else x, name="just-zero")  # Just x |-> Just 0
    return _expect_failure("naturality", check_naturality(bad, window))


def control_profunctor_laws(window=2):
    return _expect_failure("profunctor laws", check_profunctor_laws(BrokenAction(hom_prof()), window))


def control_strength_laws(window=2):
    return _expect_failure("strength laws", check_strength_laws(CorruptedStrength(library_profunctor("kleisli-maybe")), window))


def control_prof_naturality(window=2):
    H = hom_prof()
    bad = Nat(H, H, lambda pt, h: 0, name="constant-zero")
    return _expect_failure("profunctor naturality", check_prof_naturality(bad, window))


def control_strong_naturality(window=2):
    return _expect_failure("strong naturality", check_strong_naturality(diagonal_swap(), window))


def control_factorize(bound=2):
    M = maybe()
    space = compute_coend(co_yoneda_integrand(M, 1), bound)
    return _expect_raise("factorize", lambda: factorize(space, lambda w, x: w, bound + 1), DinaturalityError)


def control_iso_pair(window=2):
    st = Structure(MonoidalTag.DAY)
    M = maybe()
    pts = st.points(window)
    return _expect_failure("iso pair", check_iso_pair(st.lam(M), swapped(st.lam_inv(M)), pts, factorize_wedges=False))


def control_structural_isos(window=2):
    st = BrokenAlpha(MonoidalTag.DAY)
    return _expect_failure("structural isos", check_structural_isos(st, [maybe()], window))


def control_triangle(window=2):
    st = BrokenAlpha(MonoidalTag.SUBST)
    M = maybe()
    return _expect_failure("triangle", check_triangle(st, M, M, window))


def control_pentagon(window=1):
    st = BrokenAlpha(MonoidalTag.SUBST)
    M = maybe()
    return _expect_failure("pentagon", check_pentagon(st, M, M, M, M, window))


def control_monoid_laws(window=2):
    return _expect_failure("monoid laws", check_monoid_laws(corrupted_monoid(library_monoid("maybe-monad")), window))


def control_monoid_morphism(window=2):
    M = library_monoid("maybe-monad")
    to_nothing = Nat(M.carrier, M.carrier, lambda X, x: X, name="to-nothing")
    return _expect_failure("monoid morphism", check_monoid_morphism(to_nothing, M, M, window))


def control_triangles(window=2):
    adj = cayley_adjunction()
    bad = replace(adj, name="cayley (swapped unit)", unit=lambda F: swapped(eta_cayley(F)))
    M = maybe()
    return _expect_failure("adjunction triangles", check_triangles(bad, [M], [], window))


def control_two_sided_inverse(window=2):
    M = maybe()
    return _expect_failure("two-sided inverse",
                           check_two_sided_inverse(eta_cayley(M), swapped(eta_cayley_inv(M)), range(window + 1)))


def control_monoidal_coherence(window=2):
    from .equivalences import check_monoidal_coherence, cayley_monoidal_structure

    S = cayley_monoidal_structure()
    bad = replace(S, name="cayley (swapped phi)", gamma=lambda A, B: swapped(S.gamma(A, B)))
    return _expect_failure("monoidal coherence", check_monoidal_coherence(bad, [maybe()], window))


def control_monoidal_nat_trans(window=2):
    from .equivalences import cayley_monoidal_structure, check_monoidal_nat_trans, composite_structure, \
        hat_monoidal_structure, identity_structure

    comp = composite_structure(cayley_monoidal_structure(), hat_monoidal_structure())
    return _expect_failure("monoidal transformation",
                           check_monoidal_nat_trans(lambda F: swapped(eta_cayley(F)), identity_structure("day"),
                                                    comp, [maybe()], window, name="swapped eta!"))


def control_colax_lax(window=2):
    from .adjunctions import kleisli_adjunction
    from .equivalences import check_colax_lax, hat_opmonoidal_structure, kleisli_monoidal_structure

    K = kleisli_monoidal_structure()
    bad = replace(K, gamma0=lambda: swapped(K.gamma0()))
    return _expect_failure("colax-lax identities",
                           check_colax_lax(kleisli_adjunction(), hat_opmonoidal_structure(), bad,
                                           [library_profunctor("kleisli-maybe")], window))


CONTROLS = {
    "functor-laws": control_functor_laws,
    "naturality": control_naturality,
    "profunctor-laws": control_profunctor_laws,
    "strength-laws": control_strength_laws,
    "profunctor-naturality": control_prof_naturality,
    "strong-naturality": control_strong_naturality,
    "factorize": control_factorize,
    "iso-pair": control_iso_pair,
    "structural-isos": control_structural_isos,
    "triangle": control_triangle,
    "pentagon": control_pentagon,
    "monoid-laws": control_monoid_laws,
    "monoid-morphism": control_monoid_morphism,
    "adjunction-triangles": control_triangles,
    "two-sided-inverse": control_two_sided_inverse,
    "monoidal-coherence": control_monoidal_coherence,
    "monoidal-transformation": control_monoidal_nat_trans,
    "colax-lax": control_colax_lax,
}


def run_controls(names=None) -> dict:
    return {n: CONTROLS[n]() for n in (names or CONTROLS)}
