"""The hat, Cayley and Kleisli functors and the two adjunctions ``Cayley -| hat -| Kleisli``.

Functors between ``[F, S]`` and strong profunctors are plain operation
bundles: an object map and a transformation map.  Units and counits are
built from explicit formulas and certified by exhibiting inverses.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import NotInvertibleError
from .finset import (
    FinFun,
    FinSet,
    LazyFun,
    compose as fcompose,
    curry,
    decode,
    encode,
    enum_hom,
    ev,
    inject_left,
    lam_inv,
    rho,
    rho_inv,
)
from .functors import FunctorRep, check_naturality, extend_by_yoneda, library_functor
from .nat import Nat, point_card
from .profunctors import (
    CayleyProf,
    DiagonalHom,
    KleisliProf,
    ProfRep,
    check_strong_naturality,
    hom_prof,
)
from .reports import Report


class HatFunctor(FunctorRep):
    """``hat P = Z |-> P(1, Z)``."""

    polynomial = True

    def __init__(self, P: ProfRep):
        self.P = P
        self.name = f"hat({P.name})"
        self._row = P.row(1)

    def card(self, n):
        return self.P.card(1, n)

    def fmap(self, f, x):
        return self.P.rmap(1, f, x)

    def decompose(self, n, x):
        return self._row.decompose(n, x)

    def compose(self, sid, args, n):
        return self._row.compose(sid, args, n)

    @property
    def shape_count(self):
        return self._row.shape_count

    def arity(self, sid):
        return self._row.arity(sid)

    @property
    def max_arity(self):
        return self._row.max_arity


def hat(P: ProfRep) -> HatFunctor:
    return HatFunctor(P)


def cayley(F: FunctorRep, name: str = None) -> CayleyProf:
    return CayleyProf(F, name=name)


def kleisli(F: FunctorRep, name: str = None) -> KleisliProf:
    return KleisliProf(F, name=name)


def hat_nat(tau: Nat) -> Nat:
    """``(hat tau)_Z = tau_{1,Z}``."""
    return Nat(hat(tau.source), hat(tau.target), lambda Z, x: tau((1, Z), x), name=f"hat({tau.name})")


def cayley_nat(tau: Nat) -> Nat:
    """``cayley(tau)_{X,Y} = tau_{X -> Y}``."""
    return Nat(cayley(tau.source), cayley(tau.target), lambda pt, p: tau(pt[1] ** pt[0], p),
               name=f"cayley({tau.name})")


def kleisli_nat(tau: Nat) -> Nat:
    """``kleisli(tau)_{X,Y} = curry(tau_Y . ev)``: postcompose every result with ``tau_Y``."""
    F, G = tau.source, tau.target

    def fn(pt, k):
        X, Y = pt
        return encode([tau(Y, v) for v in decode(k, X, F.card(Y))], G.card(Y))

    return Nat(kleisli(F), kleisli(G), fn, name=f"kleisli({tau.name})")


# -- Cayley adjunction: cayley -| hat -----------------------------------------


def eta_cayley(F: FunctorRep) -> Nat:
    """``eta!_F = F(curry rho) : F Z -> F(1 -> Z)``."""

    def fn(Z, x):
        return F.fmap(curry(rho(Z), Z, 1), x)

    return Nat(F, hat(cayley(F)), fn, name=f"eta![{F.name}]")


def eta_cayley_inv(F: FunctorRep) -> Nat:
    """``F(ev . rho^-1) : F(1 -> Z) -> F Z``."""

    def fn(Z, x):
        return F.fmap(fcompose(ev(1, Z), rho_inv(Z)), x)

    return Nat(hat(cayley(F)), F, fn, name=f"eta!^-1[{F.name}]")


def epsilon_cayley(P: ProfRep) -> Nat:
    """``eps!_P = P(lambda^-1, ev) . str : P(1, X -> Y) -> P(X, Y)``."""

    def fn(pt, v):
        X, Y = pt
        E = Y**X
        s = P.strength(1, E, X, v)
        return P.dimap(lam_inv(X), ev(X, Y), s)

    return Nat(cayley(hat(P)), P, fn, name=f"eps![{P.name}]")


# -- Kleisli adjunction: hat -| kleisli ----------------------------------------


def eta_kleisli(P: ProfRep) -> Nat:
    """``eta* = curry(varsigma^P . P(rho, id)) : P(X, Y) -> (X -> P(1, Y))``."""

    def fn(pt, p):
        X, Y = pt
        q = P.lmap(rho(X), Y, p)
        vals = [P.lmap(inject_left(X, 1, x), Y, q) for x in range(X)]
        return encode(vals, P.card(1, Y))

    return Nat(P, kleisli(hat(P)), fn, name=f"eta*[{P.name}]")


def epsilon_kleisli(F: FunctorRep) -> Nat:
    """``eps* = ev . rho^-1 : (1 -> F Z) -> F Z``."""

    def fn(Z, v):
        return ev(1, F.card(Z))(rho_inv(F.card(Z) ** 1)(v))

    return Nat(hat(kleisli(F)), F, fn, name=f"eps*[{F.name}]")


def epsilon_kleisli_inv(F: FunctorRep) -> Nat:
    """``curry rho : F Z -> (1 -> F Z)``."""

    def fn(Z, x):
        n = F.card(Z)
        return curry(rho(n), n, 1)(x)

    return Nat(F, hat(kleisli(F)), fn, name=f"eps*^-1[{F.name}]")


@dataclass
class AdjunctionRep:
    """``left -| right``; ``left_domain_prof`` says whether ``left`` starts from profunctors."""

    name: str
    left: Callable
    right: Callable
    left_nat: Callable
    right_nat: Callable
    unit: Callable
    counit: Callable
    left_domain_prof: bool

    def domain_points(self, window):
        """Probe points for objects in the domain of ``left`` (where ``right`` lands)."""
        return _points(self.left_domain_prof, window)

    def codomain_points(self, window):
        """Probe points for objects in the codomain of ``left``."""
        return _points(not self.left_domain_prof, window)


def _points(prof: bool, window: int):
    objs = range(window + 1)
    return [(X, Y) for X in objs for Y in objs] if prof else list(objs)


def cayley_adjunction() -> AdjunctionRep:
    return AdjunctionRep("cayley -| hat", cayley, hat, cayley_nat, hat_nat, eta_cayley, epsilon_cayley,
                         left_domain_prof=False)


def kleisli_adjunction() -> AdjunctionRep:
    return AdjunctionRep("hat -| kleisli", hat, kleisli, hat_nat, kleisli_nat, eta_kleisli, epsilon_kleisli,
                         left_domain_prof=True)


def check_triangles(adj: AdjunctionRep, left_objects: Sequence, right_objects: Sequence,
                    window: int = 2) -> Report:
    """``(eps L).(L eta) = id_L`` on ``left_objects`` and ``(R eps).(eta R) = id_R`` on ``right_objects``."""
    report = Report(f"triangle identities [{adj.name}]")
    for A in left_objects:
        l_eta = adj.left_nat(adj.unit(A))
        eps_l = adj.counit(adj.left(A))
        for pt in adj.codomain_points(window):
            for x in range(point_card(adj.left(A), pt)):
                y = eps_l(pt, l_eta(pt, x))
                report.check(y == x, lambda: f"(eps L).(L eta) moves {x} to {y} at {pt} for {A.name}")
    for B in right_objects:
        eta_r = adj.unit(adj.right(B))
        r_eps = adj.right_nat(adj.counit(B))
        for pt in adj.domain_points(window):
            for x in range(point_card(adj.right(B), pt)):
                y = r_eps(pt, eta_r(pt, x))
                report.check(y == x, lambda: f"(R eps).(eta R) moves {x} to {y} at {pt} for {B.name}")
    return report


def check_two_sided_inverse(f: Nat, g: Nat, points, name: str = None) -> Report:
    """``g . f = id`` and ``f . g = id`` at every point."""
    report = Report(name or f"inverse [{f.name}, {g.name}]")
    for pt in points:
        for x in range(point_card(f.source, pt)):
            y = g(pt, f(pt, x))
            report.check(y == x, lambda: f"{g.name}.{f.name} moves {x} to {y} at {pt}")
        for x in range(point_card(g.source, pt)):
            y = f(pt, g(pt, x))
            report.check(y == x, lambda: f"{f.name}.{g.name} moves {x} to {y} at {pt}")
    return report


def check_bijective(f: Nat, points, name: str = None) -> Report:
    report = Report(name or f"bijective [{f.name}]")
    for pt in points:
        comp = f.component(pt)
        report.check(comp.is_bijective(),
                     lambda: f"{f.name} at {pt}: {comp.dom.card} -> {comp.cod.card}, "
                             f"{'injective' if comp.is_injective() else 'not injective'}, "
                             f"{'surjective' if comp.is_surjective() else 'not surjective'}")
    return report


# -- the idempotent comonad and monad ------------------------------------------


def box(P: ProfRep) -> CayleyProf:
    """``box P = cayley(hat P)``."""
    return cayley(hat(P), name=f"box({P.name})")


def diamond(P: ProfRep) -> KleisliProf:
    """``diamond P = kleisli(hat P)``."""
    return kleisli(hat(P), name=f"diamond({P.name})")


def box_comonad(P: ProfRep):
    """``(box P, eps!_P, delta_P = cayley(eta!_{hat P}))``."""
    return box(P), epsilon_cayley(P), cayley_nat(eta_cayley(hat(P)))


def diamond_monad(P: ProfRep):
    """``(diamond P, eta*_P, mu_P = kleisli(eps*_{hat P}))``."""
    return diamond(P), eta_kleisli(P), kleisli_nat(epsilon_kleisli(hat(P)))


# -- full faithfulness probes -----------------------------------------------------


def natural_transformations(F: FunctorRep, G: FunctorRep, window: int = 2, brute_limit: int = 300_000):
    """All natural ``F -> G``, as Yoneda extensions of generic images.

    When the number of component families on the window is at most
    ``brute_limit`` the families are also enumerated directly and filtered by
    naturality, and the two counts are returned for comparison.
    """
    choices = [range(G.card(F.arity(s))) for s in range(F.shape_count)]
    nats = [extend_by_yoneda(F, G, imgs, name=f"tau{list(imgs)}") for imgs in itertools.product(*choices)]
    families = 1
    for Z in range(window + 1):
        families *= G.card(Z) ** F.card(Z)
    brute = None
    if families <= brute_limit:
        brute = _brute_natural_count(F, G, window)
    return nats, brute


def _brute_natural_count(F, G, window):
    objs = list(range(window + 1))
    maps = [(a, b, f, F.on_morphism(f).table, G.on_morphism(f).table)
            for a in objs for b in objs for f in enum_hom(a, b)]
    per_obj = [list(itertools.product(range(G.card(Z)), repeat=F.card(Z))) for Z in objs]
    count = 0
    for fam in itertools.product(*per_obj):
        if all(fam[b][ff[x]] == gf[fam[a][x]] for a, b, _f, ff, gf in maps for x in range(F.card(a))):
            count += 1
    return count


def _tables(nat: Nat, points):
    return tuple(nat.component(pt).table for pt in points)


def full_faithfulness_probe(which: str, pairs=None, window: int = 2) -> Report:
    """Injectivity of ``cayley``/``kleisli`` on transformations and fullness via transposes."""
    which = which.lower()
    if which not in ("cayley", "kleisli"):
        raise ValueError("which must be 'cayley' or 'kleisli'")
    names = ["maybe", "reader2", "writer-or2", "identity"]
    if pairs is None:
        pairs = [(library_functor(a), library_functor(b)) for a in names for b in names]
    report = Report(f"full faithfulness [{which}]")
    ppoints = _points(True, window)
    for F, G in pairs:
        nats, brute = natural_transformations(F, G, window)
        if brute is not None:
            report.check(brute == len(nats), lambda: f"{F.name}->{G.name}: {brute} natural families on the window "
                                                     f"but {len(nats)} Yoneda extensions")
        for t in nats:
            report.absorb(check_naturality(t, window))
        image = cayley_nat if which == "cayley" else kleisli_nat
        seen = {}
        for t in nats:
            key = _tables(image(t), ppoints)
            prev = seen.setdefault(key, t.name)
            report.check(prev == t.name, lambda: f"{which} identifies {prev} and {t.name} ({F.name}->{G.name})")
        # fullness: every strong transformation between the images is the image of its transpose
        if which == "cayley":
            target = hat(cayley(G))
            for t in _all_nats(F, target, window):
                sigma = _vcomp(epsilon_cayley(cayley(G)), cayley_nat(t))
                pre = _vcomp(eta_cayley_inv(G), _vcomp(hat_nat(sigma), eta_cayley(F)))
                report.check(_tables(sigma, ppoints) == _tables(cayley_nat(pre), ppoints),
                             lambda: f"strong transformation {sigma.name} is not cayley of its transpose")
        else:
            source = hat(kleisli(F))
            for t in _all_nats(source, G, window):
                sigma = _vcomp(kleisli_nat(t), eta_kleisli(kleisli(F)))
                pre = _vcomp(t, epsilon_kleisli_inv(F))
                report.check(_tables(sigma, ppoints) == _tables(kleisli_nat(pre), ppoints),
                             lambda: f"strong transformation {sigma.name} is not kleisli of its transpose")
    return report


def _all_nats(F, G, window):
    nats, _ = natural_transformations(F, G, window, brute_limit=0)
    return nats


def _vcomp(second: Nat, first: Nat) -> Nat:
    return Nat(first.source, second.target, lambda pt, x: second(pt, first(pt, x)),
               name=f"{second.name}.{first.name}")


def diagonal_reindexings():
    """Strong endomorphisms of the diagonal profunctor ``(X x X -> Y)``: ``h |-> h . phi``."""
    D = DiagonalHom()
    choices = {"id": lambda x, y: (x, y), "diag": lambda x, y: (x, x)}
    out = []
    for name, phi in choices.items():
        def fn(pt, p, phi=phi):
            X, Y = pt
            vals = decode(p, X * X, Y)
            return encode([vals[(lambda a, b: a * X + b)(*phi(x, y))] for x in range(X) for y in range(X)], Y)

        out.append(Nat(D, D, fn, name=f"precompose-{name}"))
    return out


def hat_faithfulness_search(candidates: Sequence[Nat] = None, window: int = 2) -> Report:
    """Look for two distinct strong transformations with the same hat image.

    The report passes either way; a witness, or its absence, is recorded as a note.
    """
    candidates = list(candidates) if candidates is not None else diagonal_reindexings()
    report = Report("hat faithfulness search")
    ppoints = _points(True, window)
    strong = [t for t in candidates if check_strong_naturality(t, window).ok]
    report.tick(len(candidates))
    found = None
    for s, t in itertools.combinations(strong, 2):
        if (s.source.name, s.target.name) != (t.source.name, t.target.name):
            continue
        if _tables(s, ppoints) != _tables(t, ppoints) and \
                _tables(hat_nat(s), range(window + 1)) == _tables(hat_nat(t), range(window + 1)):
            found = (s.name, t.name)
            break
    if found:
        report.note(f"witness: {found[0]} and {found[1]} are distinct strong transformations "
                    f"with equal hat image at window {window}")
    else:
        report.note(f"no witness found among {len(strong)} strong candidates at window {window}")
    report.witness = found
    return report


def require_iso(nat: Nat, points):
    for pt in points:
        comp = nat.component(pt)
        if not comp.is_bijective():
            raise NotInvertibleError(f"{nat.name} is not invertible at {pt}", component=(nat.name, pt))
