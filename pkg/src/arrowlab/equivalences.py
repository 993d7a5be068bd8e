"""Monoidal structure on the bridge functors and the two equivalences of monoids.

* Cayley is strong monoidal from (functors, Day) to (profunctors, Bénabou)
  with ``phi`` and ``phi_0``; Kleisli is monoidal from (functors,
  substitution) with ``xi`` and ``xi_0``.
* Doctrinal mates transport these to hat: a monoidal structure from Cayley's
  adjunction, an opmonoidal one from Kleisli's.
* Idioms correspond to box-monoids and monads to diamond-monoids; the
  round trips are checked on library instances.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .adjunctions import (
    AdjunctionRep,
    cayley,
    cayley_adjunction,
    cayley_nat,
    epsilon_cayley,
    epsilon_kleisli,
    epsilon_kleisli_inv,
    eta_cayley,
    eta_kleisli,
    hat,
    hat_nat,
    kleisli,
    kleisli_adjunction,
    kleisli_nat,
)
from .errors import NotInvertibleError
from .finset import FinFun, FinSet, LazyFun, decode, encode, ev, lam_inv
from .functors import inclusion_functor
from .monoidal import (
    DEFAULT_BOUND,
    BenabouTensor,
    DayTensor,
    MonoidalTag,
    Structure,
    SubstTensor,
    WedgeNat,
    as_tag,
    tensor,
    tensor_map,
    unit_object,
    window_points,
)
from .monoids import MonoidRep, _compose_codes
from .nat import Nat, invert, point_card
from .profunctors import hom_prof
from .reports import Report

MONOIDAL, OPMONOIDAL, STRONG = "monoidal", "opmonoidal", "strong"


def _vcomp(*nats: Nat, name: str = None) -> Nat:
    """Right-to-left composite; the source is the last transformation's."""
    fns = [n.fn for n in reversed(nats)]

    def fn(pt, x):
        for f in fns:
            x = f(pt, x)
        return x

    return Nat(nats[-1].source, nats[0].target, fn, name=name or ".".join(n.name for n in nats))


@dataclass
class MonoidalStructure:
    """``(F, gamma, gamma_0)``.

    For ``monoidal`` and ``strong`` flavors ``gamma(A, B) : F A (x)' F B -> F(A (x) B)``
    and ``gamma0() : I' -> F I``; for ``opmonoidal`` both arrows point the other way.
    """

    name: str
    functor: Callable
    functor_nat: Callable
    gamma: Callable
    gamma0: Callable
    flavor: str
    source_tag: MonoidalTag
    target_tag: MonoidalTag
    gamma_inv: Callable = None
    gamma0_inv: Callable = None
    bound: int = DEFAULT_BOUND

    @property
    def lax(self) -> bool:
        return self.flavor in (MONOIDAL, STRONG)

    def source(self) -> Structure:
        return Structure(self.source_tag, self.bound)

    def target(self) -> Structure:
        return Structure(self.target_tag, self.bound)


def as_opmonoidal(S: MonoidalStructure) -> MonoidalStructure:
    """A strong monoidal functor read as opmonoidal through its inverse structure maps."""
    if S.flavor != STRONG:
        raise ValueError(f"{S.name} is not strong")
    return MonoidalStructure(f"{S.name}^op", S.functor, S.functor_nat, S.gamma_inv, S.gamma0_inv, OPMONOIDAL,
                             S.source_tag, S.target_tag, S.gamma, S.gamma0, S.bound)


def identity_structure(tag, bound: int = DEFAULT_BOUND) -> MonoidalStructure:
    tag = as_tag(tag)

    def gamma(A, B):
        T = tensor(tag, A, B, bound)
        return Nat(T, T, lambda pt, x: x, name="id")

    def gamma0():
        I = unit_object(tag)
        return Nat(I, I, lambda pt, x: x, name="id")

    return MonoidalStructure("identity", lambda A: A, lambda t: t, gamma, gamma0, STRONG, tag, tag,
                             gamma, gamma0, bound)


def composite_structure(first: MonoidalStructure, second: MonoidalStructure) -> MonoidalStructure:
    """``second . first`` for two lax monoidal functors."""
    if not (first.lax and second.lax):
        raise ValueError("composite_structure expects lax monoidal structures")
    F, G = first, second

    def gamma(A, B):
        return _vcomp(G.functor_nat(F.gamma(A, B)), G.gamma(F.functor(A), F.functor(B)),
                      name=f"gamma[{G.name}.{F.name}]")

    def gamma0():
        return _vcomp(G.functor_nat(F.gamma0()), G.gamma0(), name=f"gamma0[{G.name}.{F.name}]")

    return MonoidalStructure(f"{G.name}.{F.name}", lambda A: G.functor(F.functor(A)),
                             lambda t: G.functor_nat(F.functor_nat(t)), gamma, gamma0, MONOIDAL,
                             F.source_tag, G.target_tag, bound=F.bound)


# -- Cayley: strong monoidal ----------------------------------------------------


def cayley_phi(F, G, bound: int = DEFAULT_BOUND) -> WedgeNat:
    """``phi : cayley F (x) cayley G -> cayley(F * G)``, ``(u, v) |-> iota_{X->W}(u, G(post)(v))``."""
    S = BenabouTensor(cayley(F), cayley(G), bound)
    D = DayTensor(F, G, bound)

    def wedge(pt, W, u, v):
        X, Y = pt
        WX, YX = W**X, Y**X
        post = LazyFun(Y**W, YX**WX,
                       lambda t: encode([_compose_codes(s, X, W, t, Y) for s in range(WX)], YX))
        return D.class_of(YX, WX, u, G.fmap(post, v))

    return WedgeNat(S, cayley(D), wedge, name=f"phi[{F.name},{G.name}]")


def cayley_phi_inv(F, G, bound: int = DEFAULT_BOUND) -> Nat:
    """``phi^-1``: the class of ``(a, u)`` goes to ``(F(c |-> x |-> (c, x)) a, G(uncurry) u)`` through ``W = C x X``."""
    S = BenabouTensor(cayley(F), cayley(G), bound)
    D = DayTensor(F, G, bound)

    def fn(pt, c):
        X, Y = pt
        YX = Y**X
        C, a, u = D.rep(YX, c)
        W = C * X
        pair = FinFun(FinSet(C), FinSet(W**X), tuple(encode([k * X + x for x in range(X)], W) for k in range(C)))
        p = F.fmap(pair, a)

        def unc(phi):
            rows = decode(phi, C, YX)
            return encode([decode(rows[k], X, Y)[x] for k in range(C) for x in range(X)], Y)

        q = G.fmap(LazyFun(YX**C, Y**W, unc), u)
        return S.class_of(pt, W, p, q)

    return Nat(cayley(D), S, fn, name=f"phi^-1[{F.name},{G.name}]")


def cayley_phi0() -> Nat:
    return Nat(hom_prof(), cayley(inclusion_functor()), lambda pt, h: h, name="phi0")


def cayley_phi0_inv() -> Nat:
    return Nat(cayley(inclusion_functor()), hom_prof(), lambda pt, h: h, name="phi0^-1")


def cayley_monoidal_structure(bound: int = DEFAULT_BOUND) -> MonoidalStructure:
    return MonoidalStructure("cayley", cayley, cayley_nat,
                             lambda A, B: cayley_phi(A, B, bound), cayley_phi0, STRONG,
                             MonoidalTag.DAY, MonoidalTag.BENABOU,
                             lambda A, B: cayley_phi_inv(A, B, bound), cayley_phi0_inv, bound)


# -- Kleisli: monoidal -------------------------------------------------------------


def kleisli_xi(F, G, bound: int = DEFAULT_BOUND) -> WedgeNat:
    """``xi : kleisli F (x) kleisli G -> kleisli(F o G)``, ``(p, q) |-> x |-> iota_W(p(x), q)``."""
    S = BenabouTensor(kleisli(F), kleisli(G), bound)
    T = SubstTensor(F, G, bound)

    def wedge(pt, W, p, q):
        X, Y = pt
        return encode([T.class_of(Y, W, v, q) for v in decode(p, X, F.card(W))], T.card(Y))

    return WedgeNat(S, kleisli(T), wedge, name=f"xi[{F.name},{G.name}]")


def kleisli_xi0() -> Nat:
    return Nat(hom_prof(), kleisli(inclusion_functor()), lambda pt, h: h, name="xi0")


def kleisli_monoidal_structure(bound: int = DEFAULT_BOUND) -> MonoidalStructure:
    return MonoidalStructure("kleisli", kleisli, kleisli_nat,
                             lambda A, B: kleisli_xi(A, B, bound), kleisli_xi0, MONOIDAL,
                             MonoidalTag.SUBST, MonoidalTag.BENABOU, bound=bound)


# -- doctrinal mates ------------------------------------------------------------


def doctrinal_mate(adj: AdjunctionRep, given: MonoidalStructure) -> MonoidalStructure:
    """Transport a structure across ``L -| R``.

    From ``L`` opmonoidal (or strong) the result is monoidal on ``R``:
    ``gamma = R(eps (x) eps) . R(phi) . eta`` and ``gamma_0 = R(phi_0) . eta``.
    From ``R`` monoidal the result is opmonoidal on ``L``:
    ``phi = eps . L(gamma) . L(eta (x) eta)`` and ``phi_0 = eps . L(gamma_0)``.
    """
    L, R, Ln, Rn, eta, eps = adj.left, adj.right, adj.left_nat, adj.right_nat, adj.unit, adj.counit
    if given.flavor == STRONG:
        given = as_opmonoidal(given)
    bound = given.bound
    if given.flavor == OPMONOIDAL:
        # given lives on L : C -> D; build the lax structure on R : D -> C
        c_tag, d_tag = given.source_tag, given.target_tag
        phi, phi0 = given.gamma, given.gamma0

        def gamma(X, Y):
            RX, RY = R(X), R(Y)
            T = tensor(c_tag, RX, RY, bound)
            ee = tensor_map(tensor(d_tag, L(RX), L(RY), bound), eps(X), eps(Y))
            return _vcomp(Rn(ee), Rn(phi(RX, RY)), eta(T), name=f"gamma[{X.name},{Y.name}]")

        def gamma0():
            I = unit_object(c_tag)
            return _vcomp(Rn(phi0()), eta(I), name="gamma0")

        return MonoidalStructure(f"mate({given.name})", R, Rn, gamma, gamma0, MONOIDAL, d_tag, c_tag,
                                 bound=bound)
    if given.flavor == MONOIDAL:
        # given lives on R : D -> C; build the oplax structure on L : C -> D
        d_tag, c_tag = given.source_tag, given.target_tag
        gam, gam0 = given.gamma, given.gamma0

        def phi(A, B):
            LA, LB = L(A), L(B)
            ee = tensor_map(tensor(c_tag, A, B, bound), eta(A), eta(B))
            return _vcomp(eps(tensor(d_tag, LA, LB, bound)), Ln(gam(LA, LB)), Ln(ee),
                          name=f"phi[{A.name},{B.name}]")

        def phi0():
            J = unit_object(d_tag)
            return _vcomp(eps(J), Ln(gam0()), name="phi0")

        return MonoidalStructure(f"mate({given.name})", L, Ln, phi, phi0, OPMONOIDAL, c_tag, d_tag,
                                 bound=bound)
    raise ValueError(f"cannot take the mate of a {given.flavor} structure")


def hat_monoidal_structure(bound: int = DEFAULT_BOUND) -> MonoidalStructure:
    """Monoidal structure on hat, the mate of Cayley's (strong) structure."""
    return doctrinal_mate(cayley_adjunction(), cayley_monoidal_structure(bound))


def hat_opmonoidal_structure(bound: int = DEFAULT_BOUND) -> MonoidalStructure:
    """Opmonoidal structure on hat, the mate of Kleisli's structure."""
    return doctrinal_mate(kleisli_adjunction(), kleisli_monoidal_structure(bound))


def hat_phi_direct(P, Q, bound: int = DEFAULT_BOUND) -> Nat:
    """The opmonoidal hat structure in closed form: ``(p, q) |-> iota_W(p, w |-> Q(const_w, id) q)``."""
    S = BenabouTensor(P, Q, bound)
    T = SubstTensor(hat(P), hat(Q), bound)

    def fn(Z, c):
        W, p, q = S.rep((1, Z), c)
        vals = [Q.lmap(FinFun(FinSet(1), FinSet(W), (w,)), Z, q) for w in range(W)]
        return T.class_of(Z, W, p, encode(vals, Q.card(1, Z)))

    return Nat(hat(S), T, fn, name=f"phi-direct[{P.name},{Q.name}]")


# -- coherence checks ------------------------------------------------------------


def _compare(report, card, pt, lhs, rhs, what):
    for c in range(card):
        l, r = lhs(pt, c), rhs(pt, c)
        report.check(l == r, lambda: f"{what} fails at {pt}, element {c}: {l} != {r}")


def check_monoidal_coherence(S: MonoidalStructure, objects, window: int = 2, triples=None) -> Report:
    """Associativity and both unit squares of a (op)monoidal structure, pointwise."""
    report = Report(f"monoidal coherence [{S.name}]")
    src, tgt = S.source(), S.target()
    F, Fn = S.functor, S.functor_nat
    points = window_points(S.target_tag, window)
    I = src.unit
    Ip = tgt.unit
    if triples is None:
        triples = [(A, B, C) for A in objects for B in objects for C in objects]
    t, tp = src.tensor, tgt.tensor
    for A, B, C in triples:
        FA, FB, FC = F(A), F(B), F(C)
        if S.lax:
            domain = tp(FA, tp(FB, FC))
            al_p = tgt.alpha(FA, FB, FC)
            g_ab = tensor_map(al_p.target, S.gamma(A, B), None)
            lhs = _vcomp(S.gamma(t(A, B), C), g_ab, al_p)
            rhs = _vcomp(Fn(src.alpha(A, B, C)), S.gamma(A, t(B, C)), tensor_map(domain, None, S.gamma(B, C)))
            for pt in points:
                _compare(report, point_card(domain, pt), pt, lhs, rhs, f"associativity ({A.name},{B.name},{C.name})")
        else:
            domain = F(t(A, t(B, C)))
            lhs = _vcomp(tensor_map(tp(F(t(A, B)), FC), S.gamma(A, B), None), S.gamma(t(A, B), C),
                         Fn(src.alpha(A, B, C)))
            rhs = _vcomp(tgt.alpha(FA, FB, FC), tensor_map(tp(FA, F(t(B, C))), None, S.gamma(B, C)),
                         S.gamma(A, t(B, C)))
            for pt in points:
                _compare(report, point_card(domain, pt), pt, lhs, rhs, f"associativity ({A.name},{B.name},{C.name})")
    for A in objects:
        FA = F(A)
        if S.lax:
            left_dom = tp(Ip, FA)
            lhs = _vcomp(Fn(src.lam(A)), S.gamma(I, A), tensor_map(left_dom, S.gamma0(), None))
            right_dom = tp(FA, Ip)
            rhs_r = _vcomp(Fn(src.rho(A)), S.gamma(A, I), tensor_map(right_dom, None, S.gamma0()))
            for pt in points:
                _compare(report, point_card(left_dom, pt), pt, lhs, tgt.lam(FA), f"left unit ({A.name})")
                _compare(report, point_card(right_dom, pt), pt, rhs_r, tgt.rho(FA), f"right unit ({A.name})")
        else:
            left_dom = F(t(I, A))
            lhs = _vcomp(tgt.lam(FA), tensor_map(tp(F(I), FA), S.gamma0(), None), S.gamma(I, A))
            right_dom = F(t(A, I))
            rhs_r = _vcomp(tgt.rho(FA), tensor_map(tp(FA, F(I)), None, S.gamma0()), S.gamma(A, I))
            for pt in points:
                _compare(report, point_card(left_dom, pt), pt, lhs, Fn(src.lam(A)), f"left unit ({A.name})")
                _compare(report, point_card(right_dom, pt), pt, rhs_r, Fn(src.rho(A)), f"right unit ({A.name})")
    return report


def check_structure_bijective(S: MonoidalStructure, pairs, window: int = 2) -> Report:
    """Every component of ``gamma`` on ``pairs`` and of ``gamma_0`` is a bijection."""
    report = Report(f"strong monoidality [{S.name}]")
    points = window_points(S.target_tag, window)
    nats = [S.gamma(A, B) for A, B in pairs] + [S.gamma0()]
    for nat in nats:
        for pt in points:
            comp = nat.component(pt)
            report.check(comp.is_bijective(), lambda: f"{nat.name} at {pt} is not a bijection "
                                                       f"({comp.dom.card} -> {comp.cod.card})")
    return report


def check_monoidal_nat_trans(tau: Callable, src: MonoidalStructure, tgt: MonoidalStructure, objects,
                             window: int = 2, name: str = "tau") -> Report:
    """Unit and binary squares for ``tau_A : F A -> G A`` between two structures of the same flavor."""
    report = Report(f"monoidal transformation [{name}]")
    base, target = src.source(), src.target()
    points = window_points(src.target_tag, window)
    I = base.unit
    lax = src.lax
    for pt in points:
        if lax:
            g0, d0 = src.gamma0(), tgt.gamma0()
            tI = tau(I)
            _compare(report, point_card(g0.source, pt), pt, lambda p, x: tI(p, g0(p, x)), d0, "unit square")
        else:
            g0, d0 = src.gamma0(), tgt.gamma0()
            tI = tau(I)
            _compare(report, point_card(g0.source, pt), pt, g0, lambda p, x: d0(p, tI(p, x)), "unit square")
    for A in objects:
        for B in objects:
            tA, tB, tAB = tau(A), tau(B), tau(base.tensor(A, B))
            gF, gG = src.gamma(A, B), tgt.gamma(A, B)
            if lax:
                dom = gF.source
                both = tensor_map(dom, tA, tB)
                lhs = _vcomp(tAB, gF)
                rhs = _vcomp(gG, both)
            else:
                dom = gF.source
                lhs = _vcomp(gG, tAB)
                rhs = _vcomp(tensor_map(gF.target, tA, tB), gF)
            for pt in points:
                _compare(report, point_card(dom, pt), pt, lhs, rhs, f"binary square ({A.name},{B.name})")
    return report


def check_colax_lax(adj: AdjunctionRep, L_op: MonoidalStructure, R_lax: MonoidalStructure, objects,
                    window: int = 2) -> Report:
    """``R phi_0 . eta_I = gamma_0`` and ``R phi_{A,B} . eta_{A (x) B} = gamma_{LA,LB} . (eta_A (x) eta_B)``."""
    report = Report(f"colax-lax identities [{adj.name}]")
    R, Rn, eta = adj.right, adj.right_nat, adj.unit
    c_tag = L_op.source_tag
    points = window_points(c_tag, window)
    I = unit_object(c_tag)
    lhs0 = _vcomp(Rn(L_op.gamma0()), eta(I))
    rhs0 = R_lax.gamma0()
    for pt in points:
        _compare(report, point_card(I, pt), pt, lhs0, rhs0, "unit identity")
    for A in objects:
        for B in objects:
            T = tensor(c_tag, A, B, L_op.bound)
            lhs = _vcomp(Rn(L_op.gamma(A, B)), eta(T))
            rhs = _vcomp(R_lax.gamma(adj.left(A), adj.left(B)), tensor_map(T, eta(A), eta(B)))
            for pt in points:
                _compare(report, point_card(T, pt), pt, lhs, rhs, f"binary identity ({A.name},{B.name})")
    return report


# -- lifting monoids ----------------------------------------------------------------


def lift_monoid(S: MonoidalStructure, M: MonoidRep, name: str = None) -> MonoidRep:
    """``(F M, F m . gamma, F e . gamma_0)``."""
    if not S.lax:
        raise ValueError(f"{S.name} is {S.flavor}; lift_monoid needs a monoidal structure")
    if M.tag is not S.source_tag:
        raise ValueError(f"{M.name} lives in the {M.tag.value} tensor, {S.name} starts from {S.source_tag.value}")
    C = M.carrier
    mult = _vcomp(S.functor_nat(M.mult), S.gamma(C, C), name=f"{S.name}(m).gamma")
    unit = _vcomp(S.functor_nat(M.unit_map), S.gamma0(), name=f"{S.name}(e).gamma0")
    return MonoidRep(S.target_tag, S.functor(C), mult, unit, name=name or f"{S.name}({M.name})", bound=S.bound)


@dataclass
class TMonoid:
    """A monoid with the (unique) algebra or coalgebra of an idempotent (co)monad.

    ``kind`` is ``"box"`` (coalgebra ``C -> box C``, inverse to ``eps!``) or
    ``"diamond"`` (algebra ``diamond C -> C``, inverse to ``eta*``).
    """

    base: MonoidRep
    algebra: Nat
    kind: str
    notes: list = field(default_factory=list)


def derived_algebra(M: MonoidRep, kind: str, window: int = 2) -> Nat:
    """The inverse of ``eps!`` (box) or ``eta*`` (diamond), certified on the window."""
    C = M.carrier
    base = epsilon_cayley(C) if kind == "box" else eta_kleisli(C)
    inv = invert(base, name=f"{base.name}^-1")
    for pt in window_points(MonoidalTag.BENABOU, window):
        inv.component(pt)  # raises NotInvertibleError when the component is not a bijection
    return inv


def t_monoid(M: MonoidRep, kind: str, algebra: Nat = None, window: int = 2) -> TMonoid:
    if kind not in ("box", "diamond"):
        raise ValueError("kind must be 'box' or 'diamond'")
    derived = derived_algebra(M, kind, window)
    if algebra is not None:
        for pt in window_points(MonoidalTag.BENABOU, window):
            if algebra.component(pt).table != derived.component(pt).table:
                raise NotInvertibleError(f"supplied {kind}-structure differs from the derived one at {pt}",
                                         component=(algebra.name, pt))
    return TMonoid(M, algebra or derived, kind)


def lift_monoid_oplax(L: MonoidalStructure, TM: TMonoid, window: int = 2, bound: int = None,
                      name: str = None) -> MonoidRep:
    """``(hat C, hat m . phi_{C,C}^-1, hat e . phi_0^-1)`` for a diamond-monoid ``C``.

    The inverses are assembled from ``eps*^-1``, the inverse of ``hat(xi . (eta* (x) id))``
    and the algebra, and are certified to invert ``phi`` on the window.
    """
    if TM.kind != "diamond":
        raise ValueError("lift_monoid_oplax expects a diamond-monoid")
    bound = bound or L.bound
    M, alg = TM.base, TM.algebra
    C = M.carrier
    I = inclusion_functor()

    hat_xi0 = hat_nat(kleisli_xi0())
    phi0_inv = _vcomp(invert(hat_xi0, name="hat(xi0)^-1"), epsilon_kleisli_inv(I), name="phi0^-1")

    def phi_inv(A):
        hA, hC = hat(A), hat(C)
        K = hat_of_xi_eta(A, hC, bound)
        fix = hat_nat(tensor_map(BenabouTensor(A, kleisli(hC), bound), None, alg))
        return _vcomp(fix, invert(K, name=f"{K.name}^-1"), epsilon_kleisli_inv(SubstTensor(hA, hC, bound)),
                      name=f"phi^-1[{A.name},{C.name}]")

    points = window_points(MonoidalTag.SUBST, window)
    CC = BenabouTensor(C, C, bound)
    for label, fwd, bwd in (("phi_0", L.gamma0(), phi0_inv),
                            ("phi_{C,C}", L.gamma(C, C), phi_inv(C)),
                            ("phi_{CxC,C}", L.gamma(CC, C), phi_inv(CC))):
        for pt in points:
            for x in range(point_card(bwd.source, pt)):
                if fwd(pt, bwd(pt, x)) != x:
                    raise NotInvertibleError(f"constructed inverse of {label} fails at {pt}, element {x}",
                                             component=(label, pt))
            for x in range(point_card(fwd.source, pt)):
                if bwd(pt, fwd(pt, x)) != x:
                    raise NotInvertibleError(f"{label} is not invertible at {pt}: element {x} is not recovered",
                                             component=(label, pt))
    mult = _vcomp(hat_nat(M.mult), phi_inv(C), name=f"hat(m).phi^-1")
    unit = _vcomp(hat_nat(M.unit_map), phi0_inv, name=f"hat(e).phi0^-1")
    return MonoidRep(MonoidalTag.SUBST, hat(C), mult, unit, name=name or f"hat({M.name})", bound=bound)


def hat_of_xi_eta(P, F, bound: int = DEFAULT_BOUND) -> Nat:
    """``hat(xi_{hat P, F} . (eta*_P (x) id)) : hat(P (x) kleisli F) -> hat(kleisli(hat P o F))``."""
    hP = hat(P)
    xi = kleisli_xi(hP, F, bound)
    pre = tensor_map(BenabouTensor(P, kleisli(F), bound), eta_kleisli(P), None)
    return hat_nat(_vcomp(xi, pre, name=f"xi.(eta*(x)id)[{P.name},{F.name}]"))


# -- the two equivalences ----------------------------------------------------------


def idiom_to_arrow(M: MonoidRep, window: int = 2) -> TMonoid:
    """``L(M)`` through Cayley, with coalgebra ``L eta``; checked against the inverse of ``eps!``."""
    S = cayley_monoidal_structure(M.bound)
    A = lift_monoid(S, M, name=f"static({M.name})")
    coalg = cayley_nat(eta_cayley(M.carrier))
    return t_monoid(A, "box", algebra=coalg, window=window)


def arrow_to_idiom(T: TMonoid) -> MonoidRep:
    if T.kind != "box":
        raise ValueError("arrow_to_idiom expects a box-monoid (a coalgebra for box)")
    return lift_monoid(hat_monoidal_structure(T.base.bound), T.base, name=f"hat({T.base.name})")


def monad_to_arrow(M: MonoidRep, window: int = 2) -> TMonoid:
    """``R(M)`` through Kleisli, with algebra ``R eps``; checked against the inverse of ``eta*``."""
    S = kleisli_monoidal_structure(M.bound)
    A = lift_monoid(S, M, name=f"kleisli({M.name})")
    alg = kleisli_nat(epsilon_kleisli(M.carrier))
    return t_monoid(A, "diamond", algebra=alg, window=window)


def arrow_to_monad(T: TMonoid, window: int = 2) -> MonoidRep:
    if T.kind != "diamond":
        raise ValueError("arrow_to_monad expects a diamond-monoid (an algebra for diamond)")
    return lift_monoid_oplax(hat_opmonoidal_structure(T.base.bound), T, window=window)


# -- the component-1 invertibility proposition -------------------------------------


def hat_xi_invertibility(pairs=None, window: int = 2, bound: int = DEFAULT_BOUND) -> Report:
    """``hat xi_0`` and ``hat(xi . (eta* (x) id))`` are componentwise bijections."""
    from .functors import library_functor
    from .profunctors import library_profunctor

    report = Report("hat xi invertibility")
    points = list(range(window + 1))
    hx0 = hat_nat(kleisli_xi0())
    for Z in points:
        c = hx0.component(Z)
        report.check(c.is_bijective(), lambda: f"hat(xi0) at {Z} is not a bijection")
    if pairs is None:
        pairs = [(library_profunctor(p), library_functor(f))
                 for p in ("kleisli-maybe", "hom", "cayley-maybe") for f in ("maybe", "reader2")]
    for P, F in pairs:
        K = hat_of_xi_eta(P, F, bound)
        for Z in points:
            c = K.component(Z)
            report.check(c.is_bijective(), lambda: f"{K.name} at {Z} is not a bijection "
                                                   f"({c.dom.card} -> {c.cod.card})")
    return report


# -- arrow combinators: force and eval -------------------------------------------------


class ArrowOps:
    """``arr``, ``>>>`` and ``first`` of a Bénabou monoid."""

    def __init__(self, A: MonoidRep):
        if A.tag is not MonoidalTag.BENABOU:
            raise ValueError(f"{A.name} is not an arrow")
        self.A = A
        self.P = A.carrier
        self.T = A.mult.source

    def arr(self, X, Y, h: FinFun) -> int:
        return self.A.e((X, Y), encode(h.table, Y))

    def seq(self, X, W, Y, p, q) -> int:
        """``p >>> q`` for ``p in P(X, W)`` and ``q in P(W, Y)``."""
        return self.A.m((X, Y), self.T.class_of((X, Y), W, p, q))

    def first(self, X, Y, Z, p) -> int:
        return self.P.strength(X, Y, Z, p)


def force_via_combinators(A: MonoidRep) -> Nat:
    """``force f = arr (x |-> ((), x)) >>> first f >>> arr (\\(f, a) -> f a)``."""
    ops = ArrowOps(A)
    P = A.carrier

    def fn(pt, f):
        X, Y = pt
        E = Y**X
        a1 = ops.arr(X, X, lam_inv(X))
        mid = ops.first(1, E, X, f)
        a2 = ops.arr(E * X, Y, ev(X, Y))
        return ops.seq(X, E * X, Y, ops.seq(X, X, E * X, a1, mid), a2)

    return Nat(cayley(hat(P)), P, fn, name=f"force[{A.name}]")


def eval_via_combinators(A: MonoidRep) -> Nat:
    """``eval c = a |-> arr (() |-> a) >>> c``."""
    ops = ArrowOps(A)
    P = A.carrier

    def fn(pt, c):
        X, Y = pt
        vals = [ops.seq(1, X, Y, ops.arr(1, X, FinFun(FinSet(1), FinSet(X), (a,))), c) for a in range(X)]
        return encode(vals, P.card(1, Y))

    return Nat(P, kleisli(hat(P)), fn, name=f"eval[{A.name}]")


def lave_witness(A: MonoidRep, point=(2, 2)):
    """A two-sided inverse of ``eval`` at ``point``, or ``None`` when none exists."""
    comp = eval_via_combinators(A).component(point)
    if comp.is_bijective():
        return comp.inverse()
    return None


# -- searches and comparisons ---------------------------------------------------------


def xi_surjectivity_search(pairs=None, window: int = 2, bound: int = DEFAULT_BOUND) -> Report:
    """Look for a point where ``xi`` misses an element; absence is recorded, not failed."""
    from .functors import library_functor

    report = Report("xi non-surjectivity search")
    if pairs is None:
        names = ("maybe", "reader2", "writer-or2")
        pairs = [(library_functor(a), library_functor(b)) for a in names for b in names]
    witness = None
    for F, G in pairs:
        xi = kleisli_xi(F, G, bound)
        for pt in window_points(MonoidalTag.BENABOU, window):
            comp = xi.component(pt)
            report.checked += 1
            if not comp.is_surjective():
                witness = (F.name, G.name, pt, comp.dom.card, comp.cod.card)
                break
        if witness:
            break
    if witness:
        F, G, pt, a, b = witness
        report.note(f"xi[{F},{G}] at {pt} is not surjective ({a} -> {b})")
    else:
        report.note("no witness at this scale")
    report.witness = witness
    return report


def compare_monoids(M: MonoidRep, N: MonoidRep, window: int = 2, name: str = None) -> Report:
    """Table equality of unit and multiplication, for monoids on structurally equal carriers."""
    report = Report(name or f"compare [{M.name} vs {N.name}]")
    for pt in window_points(M.tag, window):
        cm, cn = M.unit_map.component(pt), N.unit_map.component(pt)
        report.check(cm.table == cn.table, lambda: f"units differ at {pt}")
        sm, sn = M.mult.source, N.mult.source
        report.check(point_card(sm, pt) == point_card(sn, pt), lambda: f"tensor carriers differ at {pt}")
        for c in range(point_card(sm, pt)):
            l, r = M.m(pt, c), N.m(pt, c)
            report.check(l == r, lambda: f"multiplications differ at {pt}, element {c}: {l} != {r}")
    return report


def monoid_iso_report(f: Nat, M: MonoidRep, N: MonoidRep, window: int = 2, name: str = None) -> Report:
    """``f : M -> N`` is a monoid morphism whose components on the window are bijections."""
    from .monoids import check_monoid_morphism

    report = Report(name or f"monoid iso [{f.name}]")
    report.absorb(check_monoid_morphism(f, M, N, window))
    for pt in window_points(M.tag, window):
        comp = f.component(pt)
        report.check(comp.is_bijective(), lambda: f"{f.name} at {pt} is not a bijection "
                                                   f"({comp.dom.card} -> {comp.cod.card})")
    return report


def idiom_round_trip(M: MonoidRep, window: int = 2, arrow_window: int = None) -> Report:
    """``arrow_to_idiom(idiom_to_arrow(M))`` is isomorphic to ``M`` through ``eta!``."""
    from .monoids import check_monoid_laws

    report = Report(f"idiom round trip [{M.name}]")
    T = idiom_to_arrow(M, window)
    # the arrow side grows as nested exponentials, so its laws may use a smaller window
    report.absorb(check_monoid_laws(T.base, window if arrow_window is None else arrow_window), "arrow: ")
    back = arrow_to_idiom(T)
    report.absorb(check_monoid_laws(back, window), "back: ")
    report.absorb(monoid_iso_report(eta_cayley(M.carrier), M, back, window), "eta: ")
    return report


def monad_round_trip(M: MonoidRep, window: int = 2, arrow_window: int = None) -> Report:
    """``arrow_to_monad(monad_to_arrow(M))`` is isomorphic to ``M`` through ``eps*``."""
    from .monoids import check_monoid_laws

    report = Report(f"monad round trip [{M.name}]")
    T = monad_to_arrow(M, window)
    # the arrow side grows as nested exponentials, so its laws may use a smaller window
    report.absorb(check_monoid_laws(T.base, window if arrow_window is None else arrow_window), "arrow: ")
    back = arrow_to_monad(T, window)
    report.absorb(check_monoid_laws(back, window), "back: ")
    report.absorb(monoid_iso_report(epsilon_kleisli(M.carrier), back, M, window), "eps: ")
    return report


def box_round_trip(A: MonoidRep, window: int = 2) -> Report:
    """For a box-monoid ``A``, ``alpha = eps!^-1`` is an iso ``A -> idiom_to_arrow(arrow_to_idiom(A))``."""
    report = Report(f"box round trip [{A.name}]")
    T = t_monoid(A, "box", window=window)
    again = idiom_to_arrow(arrow_to_idiom(T), window)
    report.absorb(monoid_iso_report(T.algebra, A, again.base, window), "alpha: ")
    return report


def diamond_round_trip(A: MonoidRep, window: int = 2) -> Report:
    """For a diamond-monoid ``A``, ``alpha = eta*^-1`` is an iso ``monad_to_arrow(arrow_to_monad(A)) -> A``."""
    report = Report(f"diamond round trip [{A.name}]")
    T = t_monoid(A, "diamond", window=window)
    again = monad_to_arrow(arrow_to_monad(T, window), window)
    report.absorb(monoid_iso_report(T.algebra, again.base, A, window), "alpha: ")
    return report


def box_image_criterion(A: MonoidRep, window: int = 2) -> Report:
    """Records whether ``eps!`` is componentwise bijective and whether the box structure exists; they must agree."""
    report = Report(f"box-image criterion [{A.name}]")
    eps = epsilon_cayley(A.carrier)
    bij = all(eps.component(pt).is_bijective() for pt in window_points(MonoidalTag.BENABOU, window))
    try:
        t_monoid(A, "box", window=window)
        has = True
    except NotInvertibleError:
        has = False
    report.check(bij == has, lambda: f"eps! bijective={bij} but box structure exists={has}")
    report.note(f"eps! bijective on the window: {bij}")
    return report
