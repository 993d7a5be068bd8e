"""Strong endoprofunctors on finite sets.

A profunctor ``P`` is presented row by row: ``row(X)`` is the covariant
functor ``Y |-> P(X, Y)``, and element indices of ``P(X, Y)`` are those of
``row(X)`` at ``Y``.  Every library profunctor has polynomial rows, which is
what makes Bénabou composites computable in normal form.

Only right strength is represented: ``strength(X, Y, Z, p)`` lands in
``P(X x Z, Y x Z)``.  All checks work one element at a time, so even the
composition law (objects up to size 8) stays cheap.
"""
from __future__ import annotations

from .finset import (
    FinFun,
    FinSet,
    LazyFun,
    alpha,
    alpha_inv,
    compose as fcompose,
    decode,
    encode,
    enum_hom,
    identity,
    inject_left,
    inject_right,
    precompose_code,
    product_map,
    proj1,
)
from .functors import ComposeFunctor, FunctorRep, maybe, power, writer
from .nat import Nat
from .reports import Report


class ProfRep:
    """A strong profunctor ``F^op x F -> S``."""

    name = "P"

    def row(self, X: int) -> FunctorRep:
        raise NotImplementedError

    def card(self, X: int, Y: int) -> int:
        return self.row(X).card(Y)

    def lmap(self, f, Y: int, p: int) -> int:
        """``P(f, id_Y)`` for ``f : X' -> X``."""
        raise NotImplementedError

    def rmap(self, X: int, g, p: int) -> int:
        """``P(id_X, g)`` for ``g : Y -> Y'``."""
        return self.row(X).fmap(g, p)

    def dimap(self, f, g, p: int) -> int:
        return self.rmap(f.dom.card, g, self.lmap(f, g.dom.card, p))

    def strength(self, X: int, Y: int, Z: int, p: int) -> int:
        raise NotImplementedError

    # tabulated views
    def on_pair(self, X, Y) -> FinSet:
        return FinSet(self.card(X, Y))

    def on_maps(self, f, g) -> FinFun:
        X, Y = f.cod.card, g.dom.card
        return FinFun(FinSet(self.card(X, Y)), FinSet(self.card(f.dom.card, g.cod.card)),
                      tuple(self.dimap(f, g, p) for p in range(self.card(X, Y))))

    def strength_map(self, X, Y, Z) -> FinFun:
        return FinFun(FinSet(self.card(X, Y)), FinSet(self.card(X * Z, Y * Z)),
                      tuple(self.strength(X, Y, Z, p) for p in range(self.card(X, Y))))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def hom_times_id(code: int, X: int, Y: int, Z: int) -> int:
    """``h |-> h x id_Z`` on function codes, (X -> Y) to (X x Z -> Y x Z)."""
    vals = decode(code, X, Y)
    return encode([v * Z + z for v in vals for z in range(Z)], Y * Z)


class HomProf(ProfRep):
    """``Hom(X, Y) = Y^X`` with strength ``h |-> h x id``."""

    name = "hom"

    def row(self, X):
        return power(X)

    def card(self, X, Y):
        return Y**X

    def lmap(self, f, Y, p):
        return precompose_code(f, Y)(p)

    def strength(self, X, Y, Z, p):
        return hom_times_id(p, X, Y, Z)


_HOM = HomProf()


def hom_prof() -> HomProf:
    return _HOM


class KleisliProf(ProfRep):
    """``(X, Y) |-> X -> F Y``; strength maps each result through the canonical functor strength."""

    def __init__(self, F: FunctorRep, name: str = None):
        self.F = F
        self.name = name or f"kleisli({F.name})"
        self._rows = {}

    def row(self, X):
        r = self._rows.get(X)
        if r is None:
            r = self._rows[X] = ComposeFunctor(power(X), self.F, name=f"{self.F.name}(-)^{X}")
        return r

    def card(self, X, Y):
        return self.F.card(Y) ** X

    def lmap(self, f, Y, p):
        return precompose_code(f, self.F.card(Y))(p)

    def rmap(self, X, g, p):
        F = self.F
        vals = decode(p, X, F.card(g.dom.card))
        return encode([F.fmap(g, v) for v in vals], F.card(g.cod.card))

    def strength(self, X, Y, Z, p):
        F = self.F
        vals = decode(p, X, F.card(Y))
        pairs = [inject_right(Y, Z, z) for z in range(Z)]
        return encode([F.fmap(pairs[z], v) for v in vals for z in range(Z)], F.card(Y * Z))


class CayleyProf(ProfRep):
    """``(X, Y) |-> F(X -> Y)``; strength is ``F(h |-> h x id)``."""

    def __init__(self, F: FunctorRep, name: str = None):
        self.F = F
        self.name = name or f"cayley({F.name})"
        self._rows = {}

    def row(self, X):
        r = self._rows.get(X)
        if r is None:
            r = self._rows[X] = ComposeFunctor(self.F, power(X), name=f"{self.F.name}((-)^{X})")
        return r

    def card(self, X, Y):
        return self.F.card(Y**X)

    def lmap(self, f, Y, p):
        return self.F.fmap(precompose_code(f, Y), p)

    def rmap(self, X, g, p):
        Y, Y2 = g.dom.card, g.cod.card
        post = LazyFun(Y**X, Y2**X, lambda h: encode([g(v) for v in decode(h, X, Y)], Y2))
        return self.F.fmap(post, p)

    def strength(self, X, Y, Z, p):
        times = LazyFun(Y**X, (Y * Z) ** (X * Z), lambda h: hom_times_id(h, X, Y, Z))
        return self.F.fmap(times, p)


class KleisliMaybeHand(ProfRep):
    """``X -> Maybe Y`` written out by hand; an oracle for ``kleisli(maybe())``.

    An element is a code over base ``Y + 1`` whose digit ``Y`` means Nothing.
    """

    name = "kleisli-maybe-hand"

    def __init__(self):
        self._rows = {}

    def row(self, X):
        r = self._rows.get(X)
        if r is None:
            r = self._rows[X] = ComposeFunctor(power(X), maybe(), name=f"maybe(-)^{X}")
        return r

    def card(self, X, Y):
        return (Y + 1) ** X

    def lmap(self, f, Y, p):
        vals = decode(p, f.cod.card, Y + 1)
        return encode([vals[f(i)] for i in range(f.dom.card)], Y + 1)

    def rmap(self, X, g, p):
        Y, Y2 = g.dom.card, g.cod.card
        return encode([Y2 if v == Y else g(v) for v in decode(p, X, Y + 1)], Y2 + 1)

    def strength(self, X, Y, Z, p):
        out = []
        for v in decode(p, X, Y + 1):
            for z in range(Z):
                out.append(Y * Z if v == Y else v * Z + z)
        return encode(out, Y * Z + 1)


class DiagonalHom(ProfRep):
    """``(X, Y) |-> (X x X -> Y)`` with strength ``h |-> ((x,z),(x',z')) |-> (h(x,x'), z)``.

    A control instance: the argument swap ``h |-> h . swap`` is natural but not strong.
    """

    name = "diagonal-hom"

    def row(self, X):
        return power(X * X)

    def card(self, X, Y):
        return Y ** (X * X)

    def lmap(self, f, Y, p):
        X, Xp = f.cod.card, f.dom.card
        vals = decode(p, X * X, Y)
        return encode([vals[f(a) * X + f(b)] for a in range(Xp) for b in range(Xp)], Y)

    def strength(self, X, Y, Z, p):
        vals = decode(p, X * X, Y)
        XZ = X * Z
        out = []
        for i in range(XZ):
            x, z = divmod(i, Z)
            for j in range(XZ):
                out.append(vals[x * X + j // Z] * Z + z)
        return encode(out, Y * Z)


def diagonal_swap() -> Nat:
    D = DiagonalHom()

    def fn(point, p):
        X, Y = point
        vals = decode(p, X * X, Y)
        return encode([vals[b * X + a] for a in range(X) for b in range(X)], Y)

    return Nat(D, D, fn, name="diagonal-swap")


class CorruptedStrength(ProfRep):
    """``P`` with its strength followed by the swap of elements 0 and 1 of ``Y x Z``."""

    def __init__(self, P: ProfRep):
        self.P = P
        self.name = f"corrupted({P.name})"

    def row(self, X):
        return self.P.row(X)

    def card(self, X, Y):
        return self.P.card(X, Y)

    def lmap(self, f, Y, p):
        return self.P.lmap(f, Y, p)

    def rmap(self, X, g, p):
        return self.P.rmap(X, g, p)

    def strength(self, X, Y, Z, p):
        s = self.P.strength(X, Y, Z, p)
        n = Y * Z
        if n < 2:
            return s
        swap = FinFun(FinSet(n), FinSet(n), (1, 0) + tuple(range(2, n)))
        return self.P.rmap(X * Z, swap, s)


class ZPermutedStrength(CorruptedStrength):
    """``P`` with its strength followed by a cyclic shift of the ``Z`` coordinate."""

    def __init__(self, P: ProfRep):
        super().__init__(P)
        self.name = f"z-permuted({P.name})"

    def strength(self, X, Y, Z, p):
        s = self.P.strength(X, Y, Z, p)
        if Z < 2:
            return s
        shift = product_map(identity(Y), FinFun(FinSet(Z), FinSet(Z), tuple((z + 1) % Z for z in range(Z))))
        return self.P.rmap(X * Z, shift, s)


# -- the two canonical single-variable strengths ----------------------------


def sigma_strength(P: ProfRep, X: int, Y: int, Z: int) -> FinFun:
    """``sigma^P : P(X,Y) x Z -> P(X x Z, Y)``, ``(v, z) |-> P(pi_1, id)(v)``.

    With this typing the map cannot depend on ``z`` naturally.
    """
    pi1 = proj1(X, Z)
    n = P.card(X, Y)
    return FinFun(FinSet(n * Z), FinSet(P.card(X * Z, Y)),
                  tuple(P.lmap(pi1, Y, v) for v in range(n) for _ in range(Z)))


def sigma_strength_covariant(P: ProfRep, X: int, Y: int, Z: int) -> FinFun:
    """The functor strength of ``P(X, -)``: ``(v, z) |-> P(id, y |-> (y, z))(v)`` into ``P(X, Y x Z)``."""
    n = P.card(X, Y)
    pairs = [inject_right(Y, Z, z) for z in range(Z)]
    return FinFun(FinSet(n * Z), FinSet(P.card(X, Y * Z)),
                  tuple(P.rmap(X, pairs[z], v) for v in range(n) for z in range(Z)))


def varsigma_strength(P: ProfRep, A: int, B: int, Y: int) -> FinFun:
    """``P(A x B, Y) x A -> P(B, Y)``, ``(v, a) |-> P(b |-> (a, b), id)(v)``."""
    n = P.card(A * B, Y)
    pairs = [inject_left(A, B, a) for a in range(A)]
    return FinFun(FinSet(n * A), FinSet(P.card(B, Y)),
                  tuple(P.lmap(pairs[a], Y, v) for v in range(n) for a in range(A)))


# -- law checkers ------------------------------------------------------------


def check_profunctor_laws(P: ProfRep, window: int = 2) -> Report:
    """Identity and composition in each argument, and interchange of the two actions."""
    report = Report(f"profunctor laws [{P.name}]")
    objs = range(window + 1)
    for X in objs:
        for Y in objs:
            n = P.card(X, Y)
            for p in range(n):
                report.check(P.lmap(identity(X), Y, p) == p, lambda: f"P(id,id) moves {p} at ({X},{Y})")
                report.check(P.rmap(X, identity(Y), p) == p, lambda: f"P(id,id) moves {p} at ({X},{Y})")
            for X1 in objs:
                for f in enum_hom(X1, X):
                    for X2 in objs:
                        for f2 in enum_hom(X2, X1):
                            ff = fcompose(f, f2)
                            for p in range(n):
                                report.check(P.lmap(ff, Y, p) == P.lmap(f2, Y, P.lmap(f, Y, p)),
                                             lambda: f"contravariant composition fails: f={list(f.table)}, "
                                                     f"f'={list(f2.table)} at ({X},{Y}) element {p}")
                    for Y1 in objs:
                        for g in enum_hom(Y, Y1):
                            for p in range(n):
                                lhs = P.rmap(X1, g, P.lmap(f, Y, p))
                                rhs = P.lmap(f, Y1, P.rmap(X, g, p))
                                report.check(lhs == rhs, lambda: f"interchange fails: f={list(f.table)}, "
                                                                 f"g={list(g.table)} at element {p}")
            for Y1 in objs:
                for g in enum_hom(Y, Y1):
                    for Y2 in objs:
                        for g2 in enum_hom(Y1, Y2):
                            gg = fcompose(g2, g)
                            for p in range(n):
                                report.check(P.rmap(X, gg, p) == P.rmap(X, g2, P.rmap(X, g, p)),
                                             lambda: f"covariant composition fails at ({X},{Y}) element {p}")
    return report


def check_strength_laws(P: ProfRep, window: int = 2) -> Report:
    """Unit and composition laws of ``str``, naturality in X and Y, dinaturality in Z."""
    report = Report(f"strength laws [{P.name}]")
    objs = range(window + 1)
    str_ = P.strength
    for X in objs:
        for Y in objs:
            n = P.card(X, Y)
            pi_y, pi_x = proj1(Y, 1), proj1(X, 1)
            for p in range(n):
                lhs = P.rmap(X, pi_y, str_(X, Y, 1, p))
                rhs = P.lmap(pi_x, Y, p)
                report.check(lhs == rhs, lambda: f"unit law fails at (X,Y,Z)=({X},{Y},1), element {p}: "
                                                 f"{lhs} != {rhs}")
            for V in objs:
                for W in objs:
                    a_inv = alpha_inv(X, V, W)
                    a = alpha(Y, V, W)
                    for p in range(n):
                        lhs = str_(X * V, Y * V, W, str_(X, Y, V, p))
                        rhs = P.dimap(a_inv, a, str_(X, Y, V * W, p))
                        report.check(lhs == rhs, lambda: f"composition law fails at (X,Y,Z)=({X},{Y},{V}x{W}), "
                                                         f"element {p}: {lhs} != {rhs}")
            for Z in objs:
                sp = [str_(X, Y, Z, p) for p in range(n)]
                idz = identity(Z)
                for X1 in objs:
                    for f in enum_hom(X1, X):
                        fz = product_map(f, idz)
                        for p in range(n):
                            lhs = str_(X1, Y, Z, P.lmap(f, Y, p))
                            rhs = P.lmap(fz, Y * Z, sp[p])
                            report.check(lhs == rhs, lambda: f"naturality in X fails at (X,Y,Z)=({X},{Y},{Z}), "
                                                             f"f={list(f.table)}, element {p}")
                for Y1 in objs:
                    for g in enum_hom(Y, Y1):
                        gz = product_map(g, idz)
                        for p in range(n):
                            lhs = str_(X, Y1, Z, P.rmap(X, g, p))
                            rhs = P.rmap(X * Z, gz, sp[p])
                            report.check(lhs == rhs, lambda: f"naturality in Y fails at (X,Y,Z)=({X},{Y},{Z}), "
                                                             f"g={list(g.table)}, element {p}")
                for Z1 in objs:
                    for h in enum_hom(Z, Z1):
                        xh, yh = product_map(identity(X), h), product_map(identity(Y), h)
                        for p in range(n):
                            lhs = P.lmap(xh, Y * Z1, str_(X, Y, Z1, p))
                            rhs = P.rmap(X * Z, yh, sp[p])
                            report.check(lhs == rhs, lambda: f"dinaturality in Z fails at (X,Y,Z,Z')="
                                                             f"({X},{Y},{Z},{Z1}), h={list(h.table)}, element {p}")
    return report


def check_prof_naturality(tau: Nat, window: int = 2) -> Report:
    """``tau`` commutes with both actions, for every map in the window."""
    P, Q = tau.source, tau.target
    report = Report(f"naturality [{tau.name}]")
    objs = range(window + 1)
    for X in objs:
        for Y in objs:
            n = P.card(X, Y)
            img = [tau((X, Y), p) for p in range(n)]
            for X1 in objs:
                for f in enum_hom(X1, X):
                    for p in range(n):
                        lhs = tau((X1, Y), P.lmap(f, Y, p))
                        rhs = Q.lmap(f, Y, img[p])
                        report.check(lhs == rhs, lambda: f"square fails for f={list(f.table)}:{X1}->{X} "
                                                         f"at Y={Y}, element {p}")
            for Y1 in objs:
                for g in enum_hom(Y, Y1):
                    for p in range(n):
                        lhs = tau((X, Y1), P.rmap(X, g, p))
                        rhs = Q.rmap(X, g, img[p])
                        report.check(lhs == rhs, lambda: f"square fails for g={list(g.table)}:{Y}->{Y1} "
                                                         f"at X={X}, element {p}")
    return report


def check_strong_naturality(tau: Nat, window: int = 2) -> Report:
    """Plain naturality plus ``tau_{XxZ, YxZ} . str^P = str^Q . tau_{X,Y}``."""
    P, Q = tau.source, tau.target
    report = Report(f"strong naturality [{tau.name}]")
    report.absorb(check_prof_naturality(tau, window))
    objs = range(window + 1)
    for X in objs:
        for Y in objs:
            for Z in objs:
                for p in range(P.card(X, Y)):
                    lhs = tau((X * Z, Y * Z), P.strength(X, Y, Z, p))
                    rhs = Q.strength(X, Y, Z, tau((X, Y), p))
                    report.check(lhs == rhs, lambda: f"strength square fails at (X,Y,Z)=({X},{Y},{Z}), "
                                                     f"element {p}: {lhs} != {rhs}")
    return report


def identity_prof_nat(P: ProfRep) -> Nat:
    return Nat(P, P, lambda point, p: p, name=f"id[{P.name}]")


# -- instance library --------------------------------------------------------

_PROF_LIBRARY = {
    "hom": hom_prof,
    "kleisli-maybe": lambda: KleisliProf(maybe(), name="kleisli-maybe"),
    "cayley-maybe": lambda: CayleyProf(maybe(), name="cayley-maybe"),
    "cayley-writer-or2": lambda: CayleyProf(writer(2, name="writer-or2"), name="cayley-writer-or2"),
}


def profunctor_names() -> list:
    return list(_PROF_LIBRARY)


def library_profunctor(name: str) -> ProfRep:
    from .errors import UnknownNameError

    try:
        return _PROF_LIBRARY[name]()
    except KeyError:
        raise UnknownNameError(
            f"unknown profunctor instance {name!r}; known: {', '.join(_PROF_LIBRARY)}") from None
