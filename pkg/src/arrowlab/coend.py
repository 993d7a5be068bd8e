"""Coends of integrands over finite sets.

Two engines share one interface (``carrier``, ``class_of``, ``rep``):

* :func:`compute_coend` enumerates every generator ``(W, x)`` with
  ``|W| <= K`` and quotients by the dinaturality relations with union-find.
  Classes are numbered by their minimal ``(|W|, x)`` representative.
* :class:`YonedaCoend` handles separable integrands ``A(W2) x B(W1)`` whose
  covariant factor ``A`` is polynomial.  There the coend is
  ``sum_s B(arity s)`` and classes are computed arithmetically, for any ``W``.

The union-find engine is the reference; the normal form is what the tensor
products use, and the test-suite checks both produce the same partition.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import BoundError, CoendSizeError, DinaturalityError, IndexRangeError
from .finset import (
    FinFun,
    FinSet,
    as_card,
    decode,
    encode,
    hom_tables,
    identity,
    precompose_code,
)
from .functors import FunctorRep

DEFAULT_CAP = 200_000


class Contra:
    """A contravariant functor on finite sets: ``pull(h, b)`` for ``h : W' -> W`` maps B(W) to B(W')."""

    def __init__(self, card: Callable[[int], int], pull: Callable, name: str = "B"):
        self._card = card
        self._pull = pull
        self.name = name

    def card(self, n: int) -> int:
        return self._card(n)

    def pull(self, h, b: int) -> int:
        return self._pull(h, b)


def hom_into(X: int) -> Contra:
    """``W |-> (W -> X)`` with precomposition."""
    X = as_card(X)
    return Contra(lambda w: X**w, lambda h, b: precompose_code(h, X)(b), name=f"(- -> {X})")


def functor_of_hom_into(G: FunctorRep, X: int) -> Contra:
    """``W |-> G(W -> X)``."""
    X = as_card(X)
    return Contra(lambda w: G.card(X**w), lambda h, b: G.fmap(precompose_code(h, X), b),
                  name=f"{G.name}(- -> {X})")


def constant_contra(k: int = 1) -> Contra:
    return Contra(lambda w: k, lambda h, b: b, name=f"const{k}")


class DiBifunctor:
    """``H : F^op x F -> S``.  ``act(f, g, x)`` for ``f : W1' -> W1`` and ``g : W2 -> W2'``."""

    name = "H"

    def card(self, w1: int, w2: int) -> int:
        raise NotImplementedError

    def act(self, f, g, x: int) -> int:
        raise NotImplementedError


class Integrand(DiBifunctor):
    """The separable integrand ``H(W1, W2) = A(W2) x B(W1)``; ``(a, b)`` has index ``a |B(W1)| + b``."""

    def __init__(self, A: FunctorRep, B: Contra, name: str = None):
        self.A = A
        self.B = B
        self.name = name or f"{A.name}(W) x {B.name}"

    def card(self, w1, w2):
        return self.A.card(w2) * self.B.card(w1)

    def split(self, w1, x):
        return divmod(x, self.B.card(w1))

    def index(self, w1, a, b):
        return a * self.B.card(w1) + b

    def act(self, f, g, x):
        a, b = self.split(f.cod.card, x)
        return self.index(f.dom.card, self.A.fmap(g, a), self.B.pull(f, b))


# -- relation generators ----------------------------------------------------


def _generating_maps(K: int) -> Iterator[tuple]:
    """Swaps, cycles, the inclusions n -> n+1 and the merges n+1 -> n.

    Every map among sets of size <= K factors through these, and a wedge that
    is dinatural for two maps is dinatural for their composite.
    """
    for n in range(K + 1):
        if n >= 2:
            yield n, n, (1, 0) + tuple(range(2, n))
        if n >= 3:
            yield n, n, tuple(range(1, n)) + (0,)
        if n < K:
            yield n, n + 1, tuple(range(n))
            if n >= 1:
                yield n + 1, n, tuple(range(n)) + (n - 1,)


def relation_maps(K: int, mode: str = "all") -> Iterator[tuple]:
    """``(w, w', table)`` for the non-identity maps used as relation generators."""
    if mode == "all":
        for w in range(K + 1):
            for w2 in range(K + 1):
                ident = tuple(range(w)) if w == w2 else None
                for t in hom_tables(w, w2):
                    if t != ident:
                        yield w, w2, t
    elif mode == "generating":
        seen = set()
        for w, w2, t in _generating_maps(K):
            if (w, w2, t) not in seen and not (w == w2 and t == tuple(range(w))):
                seen.add((w, w2, t))
                yield w, w2, t
    else:
        raise ValueError(f"unknown relation mode {mode!r}")


def relation_instances(H: DiBifunctor, K: int, mode: str = "all") -> Iterator[tuple]:
    """Yield ``(h, x, (W, left), (W', right))`` for each relation instance."""
    for w, w2, t in relation_maps(K, mode):
        h = FinFun(FinSet(w), FinSet(w2), t)
        id_w, id_w2 = identity(w), identity(w2)
        if isinstance(H, Integrand):
            A, B = H.A, H.B
            na, nb = A.card(w), B.card(w2)
            nb_w = B.card(w)
            pulled = [B.pull(h, b) for b in range(nb)]
            pushed = [A.fmap(h, a) for a in range(na)]
            for a in range(na):
                for b in range(nb):
                    yield h, a * nb + b, (w, a * nb_w + pulled[b]), (w2, pushed[a] * nb + b)
        else:
            for x in range(H.card(w2, w)):
                yield h, x, (w, H.act(h, id_w, x)), (w2, H.act(id_w2, h, x))


# -- union-find engine -------------------------------------------------------


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int):
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1


class CoendSpace:
    """A coend computed by enumeration, truncated at objects of size ``bound``."""

    def __init__(self, H, bound, offsets, class_ids, reps, relation_count, mode):
        self.H = H
        self.bound = bound
        self._offsets = offsets
        self._class_ids = class_ids
        self.reps = reps
        self.carrier = FinSet(len(reps))
        self.generator_count = offsets[-1]
        self.relation_count = relation_count
        self.mode = mode

    def gid(self, w: int, x: int) -> int:
        return self._offsets[w] + x

    def class_of(self, w: int, x: int) -> int:
        w = as_card(w)
        if w > self.bound:
            return self._class_of_large(w, x)
        if not 0 <= x < self._offsets[w + 1] - self._offsets[w]:
            raise IndexRangeError(f"element {x} out of range for H({w},{w})")
        return self._class_ids[self._offsets[w] + x]

    def _class_of_large(self, w, x):
        H = self.H
        if not (isinstance(H, Integrand) and H.A.polynomial):
            raise BoundError(f"object of size {w} exceeds the coend bound {self.bound}")
        a, b = H.split(w, x)
        sid, args = H.A.decompose(w, a)
        n, a0 = H.A.generic(sid)
        if n > self.bound:
            raise BoundError(f"element needs an object of size {n} but the bound is {self.bound}")
        h = FinFun(FinSet(n), FinSet(w), tuple(args))
        return self.class_of(n, H.index(n, a0, H.B.pull(h, b)))

    def rep(self, c: int) -> tuple[int, int]:
        return self.reps[c]

    def verify(self) -> bool:
        """Re-check every relation instance against ``class_of`` by a full scan."""
        for h, x, left, right in relation_instances(self.H, self.bound, "all"):
            if self.class_of(*left) != self.class_of(*right):
                return False
        return True

    def __repr__(self):
        return (f"CoendSpace(carrier={self.carrier.card}, bound={self.bound}, "
                f"generators={self.generator_count})")


def compute_coend(H: DiBifunctor, K: int, cap: int = None, relations: str = "all") -> CoendSpace:
    if K < 0:
        raise ValueError("coend bound must be a natural number")
    cap = DEFAULT_CAP if cap is None else cap
    offsets = [0]
    for w in range(K + 1):
        offsets.append(offsets[-1] + H.card(w, w))
    total = offsets[-1]
    if total > cap:
        raise CoendSizeError(
            f"coend of {H.name} at bound {K} has {total} generators, over the cap of {cap}",
            generators=total, cap=cap,
        )
    uf = _UnionFind(total)
    count = 0
    for _h, _x, (w, x), (w2, y) in relation_instances(H, K, relations):
        uf.union(offsets[w] + x, offsets[w2] + y)
        count += 1
    class_ids = [0] * total
    reps, seen = [], {}
    for w in range(K + 1):
        for x in range(offsets[w + 1] - offsets[w]):
            g = offsets[w] + x
            root = uf.find(g)
            c = seen.get(root)
            if c is None:
                c = seen[root] = len(reps)
                reps.append((w, x))
            class_ids[g] = c
    return CoendSpace(H, K, offsets, class_ids, reps, count, relations)


class YonedaCoend:
    """The coend of ``A(W) x B(W)`` for polynomial ``A``, in normal form ``sum_s B(arity s)``."""

    def __init__(self, A: FunctorRep, B: Contra, bound: int = 3, name: str = None):
        if not A.polynomial:
            raise TypeError(f"{A.name} has no shape decomposition")
        self.A = A
        self.B = B
        self.H = Integrand(A, B, name=name)
        self.bound = bound
        self.arities = A.arities
        offs = [0]
        for n in self.arities:
            offs.append(offs[-1] + B.card(n))
        self._offsets = offs
        self.carrier = FinSet(offs[-1])

    @property
    def generator_count(self) -> int:
        return sum(self.H.card(w, w) for w in range(self.bound + 1))

    def shape_offset(self, sid: int) -> int:
        return self._offsets[sid]

    def class_of_pair(self, w: int, a: int, b: int) -> int:
        sid, args = self.A.decompose(w, a)
        n = self.arities[sid]
        if n == w and all(args[k] == k for k in range(n)):
            return self._offsets[sid] + b
        h = FinFun(FinSet(n), FinSet(w), tuple(args))
        return self._offsets[sid] + self.B.pull(h, b)

    def class_of(self, w: int, x: int) -> int:
        a, b = self.H.split(w, x)
        return self.class_of_pair(w, a, b)

    def locate(self, c: int) -> tuple[int, int]:
        sid = bisect_right(self._offsets, c) - 1
        return sid, c - self._offsets[sid]

    def rep_pair(self, c: int) -> tuple[int, int, int]:
        """Canonical representative ``(W, a, b)`` of class ``c``."""
        if not 0 <= c < self.carrier.card:
            raise IndexRangeError(f"class {c} out of range for carrier of size {self.carrier.card}")
        sid, b = self.locate(c)
        n, a0 = self.A.generic(sid)
        return n, a0, b

    def rep(self, c: int) -> tuple[int, int]:
        w, a, b = self.rep_pair(c)
        return w, self.H.index(w, a, b)

    @property
    def reps(self):
        return [self.rep(c) for c in range(self.carrier.card)]

    def verify(self) -> bool:
        for h, x, left, right in relation_instances(self.H, self.bound, "all"):
            if self.class_of(*left) != self.class_of(*right):
                return False
        return True

    def __repr__(self):
        return f"YonedaCoend(carrier={self.carrier.card}, shapes={len(self.arities)})"


def inject(space, W, x: int) -> int:
    """The coend injection at ``W``; ``class_of`` itself also accepts larger objects."""
    w = as_card(W)
    if w > space.bound:
        raise BoundError(f"object of size {w} exceeds the coend bound {space.bound}")
    n = space.H.card(w, w)
    if not 0 <= x < n:
        raise IndexRangeError(f"element {x} out of range for H({w},{w}) of size {n}")
    return space.class_of(w, x)


def _memoized(wedge):
    cache = {}

    def fn(w, x):
        key = (w, x)
        v = cache.get(key)
        if v is None:
            v = cache[key] = wedge(w, x)
        return v

    return fn


def check_wedge(space, wedge: Callable[[int, int], int], mode: str = "all"):
    """Return the first relation instance a wedge fails to respect, or None."""
    wedge = _memoized(wedge)
    for h, x, (w, l), (w2, r) in relation_instances(space.H, space.bound, mode):
        if wedge(w, l) != wedge(w2, r):
            return h, x, (w, l), (w2, r)
    return None


def factorize(space, wedge: Callable[[int, int], int], target, verify: bool = True) -> FinFun:
    """The unique map out of the coend that agrees with ``wedge`` on every injection.

    ``wedge(W, x)`` gives the image of the generator ``x`` in ``H(W, W)``.
    With ``verify`` the wedge is first checked to be dinatural on every relation
    instance within the bound.
    """
    target = FinSet(as_card(target))
    wedge = _memoized(wedge)
    if verify:
        bad = check_wedge(space, wedge)
        if bad is not None:
            h, x, left, right = bad
            raise DinaturalityError(
                f"wedge is not dinatural: h={list(h.table)}:{h.dom.card}->{h.cod.card}, "
                f"element {x}: {left} gives {wedge(*left)}, {right} gives {wedge(*right)}",
                witness=bad,
            )
    table = tuple(wedge(*space.rep(c)) for c in range(space.carrier.card))
    result = FinFun(space.carrier, target, table)
    if verify:
        for w in range(space.bound + 1):
            for x in range(space.H.card(w, w)):
                if result(space.class_of(w, x)) != wedge(w, x):
                    raise DinaturalityError(f"factorization disagrees with the wedge at ({w}, {x})",
                                            witness=(w, x))
    return result


@dataclass(frozen=True)
class Verdict:
    stable: bool
    bound: int
    card_at_bound: int
    card_at_next: int
    injective: bool
    surjective: bool

    def __str__(self):
        word = "stable" if self.stable else "not stable"
        return (f"{word} at K={self.bound}: {self.card_at_bound} classes vs "
                f"{self.card_at_next} at K={self.bound + 1}")


def stabilization_check(H: DiBifunctor, K: int, cap: int = None) -> Verdict:
    small = compute_coend(H, K, cap=cap)
    big = compute_coend(H, K + 1, cap=cap)
    image = [big.class_of(w, x) for (w, x) in small.reps]
    injective = len(set(image)) == len(image)
    surjective = len(set(image)) == big.carrier.card
    return Verdict(injective and surjective, K, small.carrier.card, big.carrier.card, injective, surjective)


def co_yoneda_integrand(F: FunctorRep, X: int) -> Integrand:
    return Integrand(F, hom_into(X), name=f"{F.name}(W) x (W -> {as_card(X)})")


def co_yoneda_reduce(F: FunctorRep, X, K: int, cap: int = None):
    """The coend of ``F W x (W -> X)`` and its comparison bijection onto ``F X``."""
    X = as_card(X)
    H = co_yoneda_integrand(F, X)
    if F.polynomial:
        if K < F.max_arity:
            raise BoundError(
                f"bound K={K} is below the maximal arity {F.max_arity} of {F.name}; "
                f"use K >= {F.max_arity}"
            )
    else:
        verdict = stabilization_check(H, K, cap=cap)
        if not verdict.stable:
            raise BoundError(f"coend has not stabilized ({verdict}); try a larger K")
    space = compute_coend(H, K, cap=cap)

    def evaluate(w, x):
        a, k = H.split(w, x)
        return F.fmap(FinFun(FinSet(w), FinSet(X), decode(k, w, X)), a)

    iso = factorize(space, evaluate, F.card(X))
    if not iso.is_bijective():
        raise BoundError(f"comparison map {iso} is not a bijection; try a larger K")
    return space, iso


# -- cross-checks -------------------------------------------------------------------


def _generators(space):
    H = space.H
    for w in range(space.bound + 1):
        for x in range(H.card(w, w)):
            yield w, x


def cross_check(space, cap: int = None):
    """The union-find quotient and ``space`` induce the same partition of the generators."""
    from .reports import Report

    report = Report(f"partition cross-check [{space.H.name}]")
    ref = compute_coend(space.H, space.bound, cap=cap)
    forward = {}
    for w, x in _generators(space):
        r, y = ref.class_of(w, x), space.class_of(w, x)
        seen = forward.setdefault(r, y)
        report.check(seen == y, lambda: f"generator ({w}, {x}) is in union-find class {r} but in classes "
                                        f"{seen} and {y} of the normal form")
    report.check(len(set(forward.values())) == len(forward) == ref.carrier.card == space.carrier.card,
                 lambda: f"class counts differ: union-find {ref.carrier.card}, normal form {space.carrier.card}")
    return report


def check_determinism(H: DiBifunctor, K: int, cap: int = None):
    """Two independent computations index the carrier identically."""
    from .reports import Report

    report = Report(f"determinism [{H.name}, K={K}]")
    a, b = compute_coend(H, K, cap=cap), compute_coend(H, K, cap=cap)
    report.check(a.reps == b.reps, "representatives differ between runs")
    for w, x in _generators(a):
        report.check(a.class_of(w, x) == b.class_of(w, x), lambda: f"generator ({w}, {x}) classified differently")
    return report


def check_universal_property(space, wedge: Callable[[int, int], int], target: int):
    """``factorize`` commutes with every injection and is the only map out of the carrier that does."""
    from itertools import product as tuples

    from .reports import Report

    report = Report(f"universal property [{space.H.name} -> {target}]")
    f = factorize(space, wedge, target)
    gens = list(_generators(space))
    classes = [space.class_of(w, x) for w, x in gens]
    values = [wedge(w, x) for w, x in gens]
    report.check(all(f(c) == v for c, v in zip(classes, values)), "factorization does not commute with injections")
    count = 0
    for table in tuples(range(target), repeat=space.carrier.card):
        if all(table[c] == v for c, v in zip(classes, values)):
            count += 1
    report.check(count == 1, lambda: f"{count} maps commute with the injections, expected exactly 1")
    return report
