"""The Day, substitution and Bénabou tensors, their units and structural isomorphisms.

Every tensor is a coend ``int^W A(W) x B(W)`` with a polynomial covariant
factor ``A``, so its elements at a point are numbered in the normal form of
:class:`~arrowlab.coend.YonedaCoend`:

* Day ``(F * G)(X) = int^C F C x G(C -> X)``, normal form ``sum_s G(X^{n_s})``.
* substitution ``(F o G)(X) = int^C F C x (C -> G X)``, normal form ``sum_s (G X)^{n_s}``.
* Bénabou ``(P (x) Q)(X, Y) = int^W P(X, W) x Q(W, Y)``, normal form ``sum_s Q(n_s, Y)``.

Maps out of a tensor are given as *wedges* ``(point, W, a, b) -> element``.
They are evaluated on canonical representatives, and :meth:`_Tensor.induced`
runs them through :func:`~arrowlab.coend.factorize`, which checks dinaturality first.
"""
from __future__ import annotations

from enum import Enum
from typing import Callable

from .coend import Contra, YonedaCoend, factorize, functor_of_hom_into, hom_into
from .errors import NotInvertibleError, TagMismatchError
from .finset import FinFun, FinSet, LazyFun, decode, encode
from .functors import ComposeFunctor, FunctorRep, SumFunctor, inclusion_functor, power
from .nat import Nat
from .profunctors import ProfRep, hom_prof
from .reports import Report

DEFAULT_BOUND = 3


class MonoidalTag(Enum):
    DAY = "day"
    SUBST = "subst"
    BENABOU = "benabou"

    @property
    def symbol(self) -> str:
        return {"day": "*", "subst": "o", "benabou": "(x)"}[self.value]


def as_tag(tag) -> MonoidalTag:
    return tag if isinstance(tag, MonoidalTag) else MonoidalTag(str(tag).lower())


def unit_object(tag):
    tag = as_tag(tag)
    return hom_prof() if tag is MonoidalTag.BENABOU else inclusion_functor()


def window_points(tag, window: int):
    """The probe points of a tag's objects: sizes ``X``, or pairs ``(X, Y)`` for profunctors."""
    objs = range(window + 1)
    if as_tag(tag) is MonoidalTag.BENABOU:
        return [(X, Y) for X in objs for Y in objs]
    return list(objs)


def _code(vals, base):
    return encode(vals, base)


def _fun(W, X, code) -> FinFun:
    return FinFun(FinSet(W), FinSet(X), decode(code, W, X))


class _Tensor:
    """Shared coend bookkeeping for the three tensors."""

    tag: MonoidalTag

    def _init_tensor(self, left, right, bound):
        self.left = left
        self.right = right
        self.bound = bound
        self._spaces = {}

    def space(self, point) -> YonedaCoend:
        sp = self._spaces.get(point)
        if sp is None:
            sp = self._spaces[point] = self._make_space(point)
        return sp

    def class_of(self, point, W: int, a: int, b: int) -> int:
        return self.space(point).class_of_pair(W, a, b)

    def rep(self, point, c: int) -> tuple[int, int, int]:
        return self.space(point).rep_pair(c)

    def size(self, point) -> int:
        return self.space(point).carrier.card

    def induced(self, point, wedge: Callable, target_card: int, verify: bool = True) -> FinFun:
        """Factorize ``wedge(point, W, a, b)`` through the coend at ``point``."""
        sp = self.space(point)
        split = sp.H.split
        return factorize(sp, lambda W, x: wedge(point, W, *split(W, x)), target_card, verify=verify)

    def _make_space(self, point):
        raise NotImplementedError

    def apply_parts(self, point, W, a, b, tau, sigma):
        raise NotImplementedError


class DayTensor(_Tensor, SumFunctor):
    tag = MonoidalTag.DAY

    def __init__(self, F: FunctorRep, G: FunctorRep, bound: int = DEFAULT_BOUND, name: str = None):
        comps = [ComposeFunctor(G, power(n), name=f"{G.name}((-)^{n})") for n in F.arities]
        SumFunctor.__init__(self, comps, name=name or f"({F.name} * {G.name})")
        self._init_tensor(F, G, bound)

    def _make_space(self, X):
        return YonedaCoend(self.left, functor_of_hom_into(self.right, X), self.bound, name=self.name)

    def apply_parts(self, X, W, a, b, tau, sigma):
        if tau is not None:
            a = tau(W, a)
        if sigma is not None:
            b = sigma(X**W, b)
        return a, b


class SubstTensor(_Tensor, SumFunctor):
    tag = MonoidalTag.SUBST

    def __init__(self, F: FunctorRep, G: FunctorRep, bound: int = DEFAULT_BOUND, name: str = None):
        comps = [ComposeFunctor(power(n), G, name=f"{G.name}(-)^{n}") for n in F.arities]
        SumFunctor.__init__(self, comps, name=name or f"({F.name} o {G.name})")
        self._init_tensor(F, G, bound)

    def _make_space(self, X):
        return YonedaCoend(self.left, hom_into(self.right.card(X)), self.bound, name=self.name)

    def apply_parts(self, X, W, a, b, tau, sigma):
        if tau is not None:
            a = tau(W, a)
        if sigma is not None:
            vals = decode(b, W, sigma.source.card(X))
            b = encode([sigma(X, v) for v in vals], sigma.target.card(X))
        return a, b


class BenabouTensor(_Tensor, ProfRep):
    """Profunctor composition with the strength lifted through the coend."""

    tag = MonoidalTag.BENABOU

    def __init__(self, P: ProfRep, Q: ProfRep, bound: int = DEFAULT_BOUND, name: str = None):
        self.name = name or f"({P.name} (x) {Q.name})"
        self._init_tensor(P, Q, bound)
        self._rows = {}

    def row(self, X):
        r = self._rows.get(X)
        if r is None:
            Q = self.right
            r = self._rows[X] = SumFunctor([Q.row(n) for n in self.left.row(X).arities],
                                           name=f"{self.name}({X}, -)")
        return r

    def card(self, X, Y):
        return self.row(X).card(Y)

    def _make_space(self, point):
        X, Y = point
        Q = self.right
        B = Contra(lambda W: Q.card(W, Y), lambda h, q: Q.lmap(h, Y, q), name=f"{Q.name}(-, {Y})")
        return YonedaCoend(self.left.row(X), B, self.bound, name=self.name)

    def lmap(self, f, Y, c):
        n, p0, q = self.rep((f.cod.card, Y), c)
        return self.class_of((f.dom.card, Y), n, self.left.lmap(f, n, p0), q)

    def rmap(self, X, g, c):
        sid, q = self.space((X, g.dom.card)).locate(c)
        n = self.left.row(X).arity(sid)
        return self.row(X).offsets(g.cod.card)[sid] + self.right.rmap(n, g, q)

    def strength(self, X, Y, Z, c):
        n, p0, q = self.rep((X, Y), c)
        sp = self.left.strength(X, n, Z, p0)
        sq = self.right.strength(n, Y, Z, q)
        return self.class_of((X * Z, Y * Z), n * Z, sp, sq)

    def apply_parts(self, point, W, a, b, tau, sigma):
        X, Y = point
        if tau is not None:
            a = tau((X, W), a)
        if sigma is not None:
            b = sigma((W, Y), b)
        return a, b


_TENSORS = {MonoidalTag.DAY: DayTensor, MonoidalTag.SUBST: SubstTensor, MonoidalTag.BENABOU: BenabouTensor}


def tensor(tag, A, B, bound: int = DEFAULT_BOUND):
    return _TENSORS[as_tag(tag)](A, B, bound=bound)


def day_tensor(F, G, X, K: int = DEFAULT_BOUND) -> YonedaCoend:
    return DayTensor(F, G, bound=K).space(X)


def subst_tensor(F, G, X, K: int = DEFAULT_BOUND) -> YonedaCoend:
    return SubstTensor(F, G, bound=K).space(X)


def benabou_tensor(P, Q, K: int = DEFAULT_BOUND) -> BenabouTensor:
    return BenabouTensor(P, Q, bound=K)


def tensor_map(S: _Tensor, tau: Nat = None, sigma: Nat = None, target: _Tensor = None) -> Nat:
    """``tau (x) sigma`` out of the tensor ``S``; ``None`` stands for an identity."""
    if target is None:
        target = tensor(S.tag, tau.target if tau is not None else S.left,
                        sigma.target if sigma is not None else S.right, bound=S.bound)

    def fn(point, c):
        W, a, b = S.rep(point, c)
        a, b = S.apply_parts(point, W, a, b, tau, sigma)
        return target.class_of(point, W, a, b)

    tn = tau.name if tau is not None else "id"
    sn = sigma.name if sigma is not None else "id"
    return Nat(S, target, fn, name=f"({tn} {S.tag.symbol} {sn})")


class WedgeNat(Nat):
    """A transformation out of a tensor, specified by a wedge on generators."""

    def __init__(self, source: _Tensor, target, wedge: Callable, name: str):
        self.wedge = wedge
        super().__init__(source, target, lambda point, c: wedge(point, *source.rep(point, c)), name=name)

    def factorized(self, point, verify: bool = True) -> FinFun:
        from .nat import point_card

        return self.source.induced(point, self.wedge, point_card(self.target, point), verify=verify)


# -- structural isomorphisms ------------------------------------------------


def _identity_code(n):
    return encode(range(n), n)


class Structure:
    """Unit, tensor and the structural isomorphisms of one monoidal tag."""

    def __init__(self, tag, bound: int = DEFAULT_BOUND):
        self.tag = as_tag(tag)
        self.bound = bound

    @property
    def unit(self):
        return unit_object(self.tag)

    def tensor(self, A, B):
        return tensor(self.tag, A, B, bound=self.bound)

    def points(self, window):
        return window_points(self.tag, window)

    # lambda : I (x) A -> A
    def lam(self, A) -> WedgeNat:
        S = self.tensor(self.unit, A)
        if self.tag is MonoidalTag.DAY:
            def wedge(X, W, c, u):
                ev_c = LazyFun(X**W, X, lambda h: decode(h, W, X)[c])
                return A.fmap(ev_c, u)
        elif self.tag is MonoidalTag.SUBST:
            def wedge(X, W, c, k):
                return decode(k, W, A.card(X))[c]
        else:
            def wedge(point, W, h, p):
                X, Y = point
                return A.lmap(_fun(X, W, h), Y, p)
        return WedgeNat(S, A, wedge, name=f"lambda[{A.name}]")

    def lam_inv(self, A) -> Nat:
        S = self.tensor(self.unit, A)
        if self.tag is MonoidalTag.BENABOU:
            fn = lambda point, p: S.class_of(point, point[0], _identity_code(point[0]), p)
        else:
            fn = lambda X, x: S.class_of(X, 1, 0, x)
        return Nat(A, S, fn, name=f"lambda^-1[{A.name}]")

    # rho : A (x) I -> A
    def rho(self, A) -> WedgeNat:
        S = self.tensor(A, self.unit)
        if self.tag is MonoidalTag.BENABOU:
            def wedge(point, W, p, h):
                X, Y = point
                return A.rmap(X, _fun(W, Y, h), p)
        else:
            def wedge(X, W, a, k):
                return A.fmap(_fun(W, X, k), a)
        return WedgeNat(S, A, wedge, name=f"rho[{A.name}]")

    def rho_inv(self, A) -> Nat:
        S = self.tensor(A, self.unit)
        if self.tag is MonoidalTag.BENABOU:
            fn = lambda point, p: S.class_of(point, point[1], p, _identity_code(point[1]))
        else:
            fn = lambda X, x: S.class_of(X, X, x, _identity_code(X))
        return Nat(A, S, fn, name=f"rho^-1[{A.name}]")

    # alpha : A (x) (B (x) C) -> (A (x) B) (x) C
    def alpha(self, A, B, C) -> WedgeNat:
        S = self.tensor(A, self.tensor(B, C))
        T = self.tensor(self.tensor(A, B), C)
        inner, TL = S.right, T.left
        name = f"alpha[{A.name},{B.name},{C.name}]"
        if self.tag is MonoidalTag.DAY:
            def wedge(X, Cn, a, v):
                XC = X**Cn
                D, b, w = inner.rep(XC, v)
                E = Cn * D
                j = FinFun(FinSet(D), FinSet(E**Cn),
                           tuple(encode([c * D + d for c in range(Cn)], E) for d in range(D)))
                u = TL.class_of(E, Cn, a, B.fmap(j, b))

                def kappa(phi):
                    rows = [decode(t, Cn, X) for t in decode(phi, D, XC)]
                    return encode([rows[d][c] for c in range(Cn) for d in range(D)], X)

                hw = C.fmap(LazyFun(XC**D, X**E, kappa), w)
                return T.class_of(X, E, u, hw)
        elif self.tag is MonoidalTag.SUBST:
            def wedge(X, Cn, a, k):
                ks = decode(k, Cn, inner.card(X))
                parts = [inner.rep(X, v) for v in ks]
                E = sum(D for D, _, _ in parts)
                gb, ls, off = [], [], 0
                for D, b, l in parts:
                    inj = FinFun(FinSet(D), FinSet(E), tuple(range(off, off + D)))
                    gb.append(B.fmap(inj, b))
                    ls.extend(decode(l, D, C.card(X)))
                    off += D
                u = TL.class_of(E, Cn, a, encode(gb, B.card(E)))
                return T.class_of(X, E, u, encode(ls, C.card(X)))
        else:
            def wedge(point, W, p, v):
                X, Y = point
                V, q, r = inner.rep((W, Y), v)
                return T.class_of(point, V, TL.class_of((X, V), W, p, q), r)
        return WedgeNat(S, T, wedge, name=name)

    def alpha_inv(self, A, B, C) -> WedgeNat:
        S = self.tensor(A, self.tensor(B, C))
        T = self.tensor(self.tensor(A, B), C)
        inner, TL = S.right, T.left
        name = f"alpha^-1[{A.name},{B.name},{C.name}]"
        if self.tag is MonoidalTag.DAY:
            def wedge(X, E, u, w):
                Cn, a, v = TL.rep(E, u)
                D = E**Cn
                XC = X**Cn

                def post(t):
                    tv = decode(t, E, X)
                    return encode([encode([tv[e] for e in decode(phi, Cn, E)], X) for phi in range(D)], XC)

                hw = C.fmap(LazyFun(X**E, XC**D, post), w)
                return S.class_of(X, Cn, a, inner.class_of(XC, D, v, hw))
        elif self.tag is MonoidalTag.SUBST:
            def wedge(X, E, u, l):
                Cn, a, k = TL.rep(E, u)
                vals = [inner.class_of(X, E, g, l) for g in decode(k, Cn, B.card(E))]
                return S.class_of(X, Cn, a, encode(vals, inner.card(X)))
        else:
            def wedge(point, V, u, r):
                X, Y = point
                W, p, q = TL.rep((X, V), u)
                return S.class_of(point, W, p, inner.class_of((W, Y), V, q, r))
        return WedgeNat(T, S, wedge, name=name)


def structural_isos(tag, bound: int = DEFAULT_BOUND) -> Structure:
    return Structure(tag, bound)


def _compare(report: Report, source, point, lhs: Callable, rhs: Callable, what: str):
    from .nat import point_card

    for c in range(point_card(source, point)):
        l, r = lhs(point, c), rhs(point, c)
        report.check(l == r, lambda: f"{what} fails at {point}, element {c}: {l} != {r}")


def check_iso_pair(forward: Nat, backward: Nat, points, report: Report = None, factorize_wedges: bool = True):
    """Both composites are identities; wedge-given maps also pass factorization."""
    report = report or Report(f"iso [{forward.name}]")
    for point in points:
        if factorize_wedges:
            for nat in (forward, backward):
                if isinstance(nat, WedgeNat):
                    comp = nat.factorized(point)
                    direct = nat.component(point)
                    report.check(comp.table == direct.table,
                                 lambda: f"{nat.name} disagrees with its factorization at {point}")
        _compare(report, forward.source, point, lambda p, c: backward(p, forward(p, c)), lambda p, c: c,
                 f"{backward.name}.{forward.name} = id")
        _compare(report, backward.source, point, lambda p, c: forward(p, backward(p, c)), lambda p, c: c,
                 f"{forward.name}.{backward.name} = id")
    return report


def check_structural_isos(st: Structure, objs, window: int = 2) -> Report:
    """lambda, rho and alpha (for all triples drawn from ``objs``) are two-sided isomorphisms."""
    report = Report(f"structural isos [{st.tag.value}]")
    points = st.points(window)
    for A in objs:
        check_iso_pair(st.lam(A), st.lam_inv(A), points, report)
        check_iso_pair(st.rho(A), st.rho_inv(A), points, report)
    for A in objs:
        for B in objs:
            for C in objs:
                check_iso_pair(st.alpha(A, B, C), st.alpha_inv(A, B, C), points, report)
    return report


def check_triangle(st: Structure, A, B, window: int = 2) -> Report:
    """``(rho (x) id) . alpha = id (x) lambda`` on ``A (x) (I (x) B)``."""
    report = Report(f"triangle [{st.tag.value}; {A.name}, {B.name}]")
    I = st.unit
    src = st.tensor(A, st.tensor(I, B))
    al = st.alpha(A, I, B)
    AB = st.tensor(A, B)
    left = tensor_map(al.target, st.rho(A), None, target=AB)
    right = tensor_map(src, None, st.lam(B), target=AB)
    for point in st.points(window):
        _compare(report, src, point, lambda p, c: left(p, al(p, c)), right, "triangle")
    return report


def check_pentagon(st: Structure, A, B, C, D, window: int = 2) -> Report:
    """Both ways of reassociating ``A (x) (B (x) (C (x) D))`` to ``((A (x) B) (x) C) (x) D`` agree."""
    report = Report(f"pentagon [{st.tag.value}; {A.name}, {B.name}, {C.name}, {D.name}]")
    t = st.tensor
    src = t(A, t(B, t(C, D)))
    a1 = st.alpha(A, B, t(C, D))
    a2 = st.alpha(t(A, B), C, D)
    r1 = tensor_map(src, None, st.alpha(B, C, D), target=t(A, t(t(B, C), D)))
    r2 = st.alpha(A, t(B, C), D)
    r3 = tensor_map(r2.target, st.alpha(A, B, C), None, target=t(t(t(A, B), C), D))
    for point in st.points(window):
        _compare(report, src, point,
                 lambda p, c: a2(p, a1(p, c)),
                 lambda p, c: r3(p, r2(p, r1(p, c))), "pentagon")
    return report


def require_bijective(nat: Nat, points) -> None:
    for point in points:
        comp = nat.component(point)
        if not comp.is_bijective():
            raise NotInvertibleError(f"{nat.name} is not a bijection at {point}", component=(nat.name, point))


def same_tag(M, N):
    if M.tag is not N.tag:
        raise TagMismatchError(f"monoids live in different tensors: {M.tag.value} vs {N.tag.value}")
