"""Finitary functors on finite sets, presented as polynomials.

An element of ``F(X)`` is an ``int``.  Polynomial functors additionally
expose their *shapes*: every element decomposes uniquely as a shape ``s``
together with ``arity(s)`` arguments drawn from ``X``.  Decomposition is what
lets coends over these functors be normalised without enumeration.
"""
from __future__ import annotations

from bisect import bisect_right
from typing import Callable, Iterable, Sequence

from .finset import (
    FinFun,
    FinSet,
    LazyFun,
    as_card,
    as_set,
    compose as fcompose,
    decode,
    encode,
    enum_hom,
    identity,
    product_map,
)
from .nat import Nat
from .reports import Report


class FunctorRep:
    """A functor from finite sets to sets, computable on demand."""

    name = "F"
    polynomial = False

    def card(self, n: int) -> int:
        raise NotImplementedError

    def fmap(self, f, x: int) -> int:
        sid, args = self.decompose(f.dom.card, x)
        return self.compose(sid, [f(a) for a in args], f.cod.card)

    # polynomial interface
    def decompose(self, n: int, x: int):
        raise NotImplementedError(f"{self.name} has no shape decomposition")

    def compose(self, sid: int, args: Sequence[int], n: int) -> int:
        raise NotImplementedError(f"{self.name} has no shape decomposition")

    @property
    def shape_count(self) -> int:
        raise NotImplementedError

    def arity(self, sid: int) -> int:
        raise NotImplementedError

    @property
    def arities(self) -> tuple:
        return tuple(self.arity(s) for s in range(self.shape_count))

    @property
    def max_arity(self) -> int:
        return max(self.arities, default=0)

    def generic(self, sid: int) -> tuple[int, int]:
        """The generic element of shape ``sid``: ``(n_s, compose(sid, id))``."""
        n = self.arity(sid)
        return n, self.compose(sid, range(n), n)

    # tabulated views
    def on_object(self, X) -> FinSet:
        return FinSet(self.card(as_card(X)))

    def on_morphism(self, f) -> FinFun:
        n, m = self.card(f.dom.card), self.card(f.cod.card)
        return FinFun(FinSet(n), FinSet(m), tuple(self.fmap(f, x) for x in range(n)))

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class CustomFunctor(FunctorRep):
    """A functor given by bare callables; used for controls and ad-hoc instances."""

    def __init__(self, card: Callable[[int], int], fmap: Callable, name: str = "custom"):
        self._card = card
        self._fmap = fmap
        self.name = name

    def card(self, n):
        return self._card(n)

    def fmap(self, f, x):
        return self._fmap(f, x)


class PolyFunctor(FunctorRep):
    """``X |-> sum_i X^{arity_i}``, blocks in constructor order, tuples big-endian."""

    polynomial = True

    def __init__(self, constructors: Iterable[tuple[str, int]], name: str = None):
        self.constructors = tuple((str(c), int(a)) for c, a in constructors)
        if any(a < 0 for _, a in self.constructors):
            raise ValueError("arities must be natural numbers")
        self._arities = tuple(a for _, a in self.constructors)
        self.name = name or "+".join(f"{c}^{a}" for c, a in self.constructors)
        self._offsets = {}

    def offsets(self, n: int) -> list:
        offs = self._offsets.get(n)
        if offs is None:
            offs = [0]
            for a in self._arities:
                offs.append(offs[-1] + n**a)
            self._offsets[n] = offs
        return offs

    def card(self, n):
        return self.offsets(n)[-1]

    @property
    def shape_count(self):
        return len(self._arities)

    def arity(self, sid):
        return self._arities[sid]

    @property
    def arities(self):
        return self._arities

    def decompose(self, n, x):
        offs = self.offsets(n)
        sid = bisect_right(offs, x) - 1
        return sid, decode(x - offs[sid], self._arities[sid], n)

    def compose(self, sid, args, n):
        return self.offsets(n)[sid] + encode(args, n)

    def fmap(self, f, x):
        n = f.dom.card
        offs = self.offsets(n)
        sid = bisect_right(offs, x) - 1
        args = decode(x - offs[sid], self._arities[sid], n)
        m = f.cod.card
        return self.offsets(m)[sid] + encode([f(a) for a in args], m)


def power(n: int) -> PolyFunctor:
    """``Y |-> Y^n``; elements are function codes, so this is ``Hom(n, -)``."""
    return _POWERS.setdefault(n, PolyFunctor([("fn", n)], name=f"(-)^{n}"))


_POWERS: dict = {}


class ComposeFunctor(FunctorRep):
    """The plain composite ``Y |-> F(H(Y))``; elements are F's indices at H(Y)."""

    polynomial = True

    def __init__(self, outer: FunctorRep, inner: FunctorRep, name: str = None):
        self.outer = outer
        self.inner = inner
        self.name = name or f"{outer.name}({inner.name})"
        T = inner.shape_count
        self._T = T
        bases, base = [], 0
        self._outer_arities = outer.arities
        for a in self._outer_arities:
            bases.append(base)
            base += T**a
        bases.append(base)
        self._bases = bases
        self._arity_cache = {}

    def card(self, n):
        return self.outer.card(self.inner.card(n))

    @property
    def shape_count(self):
        return self._bases[-1]

    def _split(self, sid):
        s = bisect_right(self._bases, sid) - 1
        return s, decode(sid - self._bases[s], self._outer_arities[s], self._T)

    def arity(self, sid):
        a = self._arity_cache.get(sid)
        if a is None:
            _, ts = self._split(sid)
            a = sum(self.inner.arity(t) for t in ts)
            self._arity_cache[sid] = a
        return a

    @property
    def max_arity(self):
        inner = self.inner.max_arity
        return max((a * inner for a in self._outer_arities), default=0)

    def decompose(self, n, x):
        inner = self.inner
        s, hargs = self.outer.decompose(inner.card(n), x)
        ts, args = [], []
        for h in hargs:
            t, a = inner.decompose(n, h)
            ts.append(t)
            args.extend(a)
        return self._bases[s] + encode(ts, self._T), tuple(args)

    def compose(self, sid, args, n):
        s, ts = self._split(sid)
        inner = self.inner
        hargs, pos = [], 0
        for t in ts:
            k = inner.arity(t)
            hargs.append(inner.compose(t, args[pos:pos + k], n))
            pos += k
        return self.outer.compose(s, hargs, inner.card(n))

    def fmap(self, f, x):
        inner = self.inner
        g = LazyFun(inner.card(f.dom.card), inner.card(f.cod.card), lambda h: inner.fmap(f, h))
        return self.outer.fmap(g, x)


class SumFunctor(FunctorRep):
    """``Y |-> sum_j C_j(Y)``, summands in order."""

    polynomial = True

    def __init__(self, components: Sequence[FunctorRep], name: str = None):
        self.components = list(components)
        self.name = name or " + ".join(c.name for c in self.components)
        sb, base = [], 0
        for c in self.components:
            sb.append(base)
            base += c.shape_count
        sb.append(base)
        self._sbases = sb
        self._offsets = {}

    def offsets(self, n):
        offs = self._offsets.get(n)
        if offs is None:
            offs = [0]
            for c in self.components:
                offs.append(offs[-1] + c.card(n))
            self._offsets[n] = offs
        return offs

    def card(self, n):
        return self.offsets(n)[-1]

    def locate(self, n, x):
        offs = self.offsets(n)
        j = bisect_right(offs, x) - 1
        return j, x - offs[j]

    @property
    def shape_count(self):
        return self._sbases[-1]

    def arity(self, sid):
        j = bisect_right(self._sbases, sid) - 1
        return self.components[j].arity(sid - self._sbases[j])

    @property
    def max_arity(self):
        return max((c.max_arity for c in self.components), default=0)

    def decompose(self, n, x):
        j, local = self.locate(n, x)
        t, args = self.components[j].decompose(n, local)
        return self._sbases[j] + t, args

    def compose(self, sid, args, n):
        j = bisect_right(self._sbases, sid) - 1
        return self.offsets(n)[j] + self.components[j].compose(sid - self._sbases[j], args, n)

    def fmap(self, f, x):
        j, local = self.locate(f.dom.card, x)
        return self.offsets(f.cod.card)[j] + self.components[j].fmap(f, local)


def poly_to_rep(constructors, name: str = None) -> PolyFunctor:
    if isinstance(constructors, PolyFunctor):
        return constructors
    return PolyFunctor(constructors, name=name)


_INCLUSION = PolyFunctor([("id", 1)], name="identity")


def inclusion_functor() -> PolyFunctor:
    return _INCLUSION


# -- instance library -------------------------------------------------------

_MAYBE = PolyFunctor([("Just", 1), ("Nothing", 0)], name="maybe")


def maybe() -> PolyFunctor:
    return _MAYBE


def nothing(n: int) -> int:
    """Index of Nothing in Maybe(n)."""
    return n


def reader(E: int = 2) -> PolyFunctor:
    return PolyFunctor([("fn", E)], name=f"reader{E}")


def writer(monoid_size: int = 2, name: str = None) -> PolyFunctor:
    """``X |-> M x X``; element (w, x) has index ``w * |X| + x``."""
    return PolyFunctor([(f"w{w}", 1) for w in range(monoid_size)], name=name or f"writer{monoid_size}")


_LIBRARY = {
    "maybe": lambda: _MAYBE,
    "reader2": lambda: reader(2),
    "writer-or2": lambda: writer(2, name="writer-or2"),
    "identity": inclusion_functor,
}


def functor_names() -> list:
    return list(_LIBRARY)


def library_functor(name: str) -> FunctorRep:
    from .errors import UnknownNameError

    try:
        return _LIBRARY[name]()
    except KeyError:
        raise UnknownNameError(f"unknown functor instance {name!r}; known: {', '.join(_LIBRARY)}") from None


# -- strength, law checkers -------------------------------------------------


def canonical_strength(F: FunctorRep, A, B) -> FinFun:
    """sigma : F A x B -> F (A x B), (v, b) |-> F(a |-> (a, b))(v)."""
    na, nb = as_card(A), as_card(B)
    fa = F.card(na)
    table = []
    for v in range(fa):
        for b in range(nb):
            pair_b = FinFun(FinSet(na), FinSet(na * nb), tuple(a * nb + b for a in range(na)))
            table.append(F.fmap(pair_b, v))
    return FinFun(FinSet(fa * nb), FinSet(F.card(na * nb)), tuple(table))


def _table_key(f):
    return (f.dom.card, f.cod.card, f.table)


def check_functor_laws(F: FunctorRep, window: int = 2) -> Report:
    """F(id) = id and F(g.f) = F(g).F(f) for every map among sets of size <= window."""
    report = Report(f"functor laws [{F.name}]")
    cache = {}

    def image(f):
        key = _table_key(f)
        t = cache.get(key)
        if t is None:
            t = F.on_morphism(f).table
            cache[key] = t
        return t

    for n in range(window + 1):
        t = image(identity(n))
        for x, y in enumerate(t):
            if not report.check(x == y, lambda: f"F(id_{n}) moves element {x} to {y}"):
                break
    for a in range(window + 1):
        for b in range(window + 1):
            homs_ab = enum_hom(a, b)
            for c in range(window + 1):
                homs_bc = enum_hom(b, c)
                for f in homs_ab:
                    ff = image(f)
                    for g in homs_bc:
                        fg = image(g)
                        gf = image(fcompose(g, f))
                        ok = all(gf[x] == fg[ff[x]] for x in range(len(ff)))
                        report.check(ok, lambda: f"F(g.f) != F(g).F(f) for f={list(f.table)}:{a}->{b}, "
                                                 f"g={list(g.table)}:{b}->{c}")
    return report


def check_naturality(tau: Nat, window: int = 2) -> Report:
    """target(f) . tau_A = tau_B . source(f) for every f : A -> B in the window."""
    S, T = tau.source, tau.target
    report = Report(f"naturality [{tau.name}]")
    for a in range(window + 1):
        comp_a = [tau(a, x) for x in range(S.card(a))]
        for b in range(window + 1):
            for f in enum_hom(a, b):
                for x in range(S.card(a)):
                    lhs = T.fmap(f, comp_a[x])
                    rhs = tau(b, S.fmap(f, x))
                    if not report.check(lhs == rhs, lambda: f"square fails for f={list(f.table)}:{a}->{b} "
                                                            f"at element {x}: {lhs} != {rhs}"):
                        break
    return report


def extend_by_yoneda(F: FunctorRep, G: FunctorRep, generic_images: Sequence[int], name: str = "tau") -> Nat:
    """The natural transformation F -> G fixed by images of F's generic elements."""

    def fn(n, x):
        sid, args = F.decompose(n, x)
        return G.fmap(FinFun(FinSet(F.arity(sid)), FinSet(n), tuple(args)), generic_images[sid])

    return Nat(F, G, fn, name=name)


def check_strength_naturality(F: FunctorRep, window: int = 2) -> Report:
    """``sigma_{A,B} : F A x B -> F(A x B)`` is natural in ``A`` and in ``B``; invertible at ``B = 1``."""
    report = Report(f"strength [{F.name}]")
    sizes = range(window + 1)
    for A in sizes:
        s1 = canonical_strength(F, A, 1)
        report.check(s1.is_bijective(), lambda: f"sigma_{{{A},1}} is not a bijection")
        for B in sizes:
            s = canonical_strength(F, A, B)
            idb = identity(B)
            for A2 in sizes:
                s2 = canonical_strength(F, A2, B)
                for f in enum_hom(A, A2):
                    lhs = fcompose(F.on_morphism(product_map(f, idb)), s)
                    rhs = fcompose(s2, product_map(F.on_morphism(f), idb))
                    report.check(lhs == rhs, lambda: f"naturality in A fails for f={list(f.table)}:{A}->{A2}, B={B}")
            for B2 in sizes:
                s2 = canonical_strength(F, A, B2)
                ida = identity(A)
                for g in enum_hom(B, B2):
                    lhs = fcompose(F.on_morphism(product_map(ida, g)), s)
                    rhs = fcompose(s2, product_map(identity(F.card(A)), g))
                    report.check(lhs == rhs, lambda: f"naturality in B fails for g={list(g.table)}:{B}->{B2}, A={A}")
    return report
