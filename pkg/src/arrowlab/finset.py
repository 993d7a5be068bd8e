"""Skeletal finite sets and tabulated functions between them.

A finite set is just a cardinality ``n`` standing for ``{0, ..., n-1}``.
Products are encoded row-major (``a * |B| + b``) and function spaces use a
big-endian codec, so every construction downstream agrees on indices.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as _cartesian
from typing import Callable, Iterator, NamedTuple, Sequence, Union

from .errors import CompositionError, FactorizationError, IndexRangeError


@dataclass(frozen=True, order=True)
class FinSet:
    card: int

    def __post_init__(self):
        if not isinstance(self.card, int) or self.card < 0:
            raise ValueError(f"cardinality must be a natural number, got {self.card!r}")

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.card))

    def __len__(self) -> int:
        return self.card

    def __repr__(self):
        return f"FinSet({self.card})"


SetLike = Union[FinSet, int]


def as_card(X: SetLike) -> int:
    return X.card if isinstance(X, FinSet) else int(X)


def as_set(X: SetLike) -> FinSet:
    return X if isinstance(X, FinSet) else FinSet(int(X))


class _MapBase:
    dom: FinSet
    cod: FinSet

    def __call__(self, i: int) -> int:
        raise NotImplementedError

    def tabulate(self) -> "FinFun":
        return FinFun(self.dom, self.cod, tuple(self(i) for i in range(self.dom.card)))

    def then(self, g: "_MapBase") -> "_MapBase":
        return compose(g, self)


@dataclass(frozen=True)
class FinFun(_MapBase):
    dom: FinSet
    cod: FinSet
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "dom", as_set(self.dom))
        object.__setattr__(self, "cod", as_set(self.cod))
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.dom.card:
            raise ValueError(
                f"table has length {len(self.table)} but domain has {self.dom.card} elements"
            )
        n = self.cod.card
        for k, v in enumerate(self.table):
            if not 0 <= v < n:
                raise IndexRangeError(f"table[{k}] = {v} is outside codomain of size {n}")

    def __call__(self, i: int) -> int:
        return self.table[i]

    def tabulate(self) -> "FinFun":
        return self

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)

    def is_surjective(self) -> bool:
        return len(set(self.table)) == self.cod.card

    def is_bijective(self) -> bool:
        return self.dom.card == self.cod.card and self.is_injective()

    def inverse(self) -> "FinFun":
        if not self.is_bijective():
            raise ValueError(f"{self} is not a bijection")
        inv = [0] * self.cod.card
        for k, v in enumerate(self.table):
            inv[v] = k
        return FinFun(self.cod, self.dom, tuple(inv))

    def __repr__(self):
        return f"FinFun({self.dom.card}->{self.cod.card}, {list(self.table)})"


class LazyFun(_MapBase):
    """A function given by a rule; used where the domain is too large to tabulate."""

    __slots__ = ("dom", "cod", "fn")

    def __init__(self, dom: SetLike, cod: SetLike, fn: Callable[[int], int]):
        self.dom = as_set(dom)
        self.cod = as_set(cod)
        self.fn = fn

    def __call__(self, i: int) -> int:
        return self.fn(i)

    def __repr__(self):
        return f"LazyFun({self.dom.card}->{self.cod.card})"


def fun(dom: SetLike, cod: SetLike, table: Sequence[int]) -> FinFun:
    return FinFun(as_set(dom), as_set(cod), tuple(table))


def identity(A: SetLike) -> FinFun:
    n = as_card(A)
    return FinFun(FinSet(n), FinSet(n), tuple(range(n)))


def bang(A: SetLike) -> FinFun:
    n = as_card(A)
    return FinFun(FinSet(n), FinSet(1), (0,) * n)


def empty_map(B: SetLike) -> FinFun:
    return FinFun(FinSet(0), as_set(B), ())


def constant(A: SetLike, B: SetLike, b: int) -> FinFun:
    return FinFun(as_set(A), as_set(B), (b,) * as_card(A))


def compose(g: _MapBase, f: _MapBase) -> _MapBase:
    """``g . f``; tabulated when both sides are tabulated."""
    if f.cod != g.dom:
        raise CompositionError(
            f"cannot compose: f ends at {f.cod.card} but g starts at {g.dom.card}"
        )
    if isinstance(f, FinFun) and isinstance(g, FinFun):
        gt = g.table
        return FinFun(f.dom, g.cod, tuple(gt[v] for v in f.table))
    return LazyFun(f.dom, g.cod, lambda i: g(f(i)))


def is_identity(f: _MapBase) -> bool:
    return f.dom == f.cod and all(f(i) == i for i in range(f.dom.card))


# -- products --------------------------------------------------------------


def product(A: SetLike, B: SetLike) -> FinSet:
    return FinSet(as_card(A) * as_card(B))


def pair_index(a: int, b: int, A: SetLike, B: SetLike) -> int:
    na, nb = as_card(A), as_card(B)
    if not (0 <= a < na and 0 <= b < nb):
        raise IndexRangeError(f"pair ({a}, {b}) out of range for {na} x {nb}")
    return a * nb + b


def unpair_index(k: int, A: SetLike, B: SetLike) -> tuple[int, int]:
    na, nb = as_card(A), as_card(B)
    if not 0 <= k < na * nb:
        raise IndexRangeError(f"index {k} out of range for {na} x {nb}")
    return divmod(k, nb)


def proj1(A: SetLike, B: SetLike) -> FinFun:
    na, nb = as_card(A), as_card(B)
    return FinFun(FinSet(na * nb), FinSet(na), tuple(k // nb for k in range(na * nb)))


def proj2(A: SetLike, B: SetLike) -> FinFun:
    na, nb = as_card(A), as_card(B)
    return FinFun(FinSet(na * nb), FinSet(nb), tuple(k % nb for k in range(na * nb)))


def tuple_(f: FinFun, g: FinFun) -> FinFun:
    """The pairing <f, g> : A -> B x C."""
    if f.dom != g.dom:
        raise CompositionError(f"<f, g> needs a shared domain, got {f.dom.card} and {g.dom.card}")
    nc = g.cod.card
    return FinFun(f.dom, FinSet(f.cod.card * nc), tuple(f(i) * nc + g(i) for i in range(f.dom.card)))


def product_map(f: _MapBase, g: _MapBase) -> _MapBase:
    """f x g : A x C -> B x D."""
    nc, nd = g.dom.card, g.cod.card
    dom = FinSet(f.dom.card * nc)
    cod = FinSet(f.cod.card * nd)
    if isinstance(f, FinFun) and isinstance(g, FinFun):
        return FinFun(dom, cod, tuple(f(a) * nd + g(c) for a in range(f.dom.card) for c in range(nc)))
    return LazyFun(dom, cod, lambda k: f(k // nc) * nd + g(k % nc))


# -- exponentials ----------------------------------------------------------


def exponential(A: SetLike, B: SetLike) -> FinSet:
    return FinSet(as_card(B) ** as_card(A))


def encode(values: Sequence[int], base: int) -> int:
    code = 0
    for v in values:
        code = code * base + v
    return code


def decode(code: int, length: int, base: int) -> tuple:
    if length == 0:
        return ()
    if base == 1:
        return (0,) * length
    out = [0] * length
    for k in range(length - 1, -1, -1):
        code, out[k] = divmod(code, base)
    return tuple(out)


def fun_to_index(f: Union[FinFun, Sequence[int]], B: SetLike = None) -> int:
    if isinstance(f, FinFun):
        return encode(f.table, f.cod.card)
    if B is None:
        raise ValueError("codomain size required for a bare table")
    return encode(f, as_card(B))


def index_to_fun(i: int, A: SetLike, B: SetLike) -> FinFun:
    na, nb = as_card(A), as_card(B)
    if not 0 <= i < nb**na:
        raise IndexRangeError(f"index {i} out of range for {na} -> {nb}")
    return FinFun(FinSet(na), FinSet(nb), decode(i, na, nb))


def ev(A: SetLike, B: SetLike) -> FinFun:
    """ev : (A -> B) x A -> B."""
    na, nb = as_card(A), as_card(B)
    table = []
    for h in range(nb**na):
        t = decode(h, na, nb)
        table.extend(t[a] for a in range(na))
    return FinFun(FinSet(nb**na * na), FinSet(nb), tuple(table))


def curry(f: FinFun, X: SetLike, A: SetLike) -> FinFun:
    """Curry ``f : X x A -> B`` into ``X -> (A -> B)``."""
    nx, na = as_card(X), as_card(A)
    if f.dom.card != nx * na:
        raise FactorizationError(
            f"domain of size {f.dom.card} is not the declared product {nx} x {na}"
        )
    nb = f.cod.card
    rows = tuple(encode(f.table[x * na:(x + 1) * na], nb) for x in range(nx))
    return FinFun(FinSet(nx), FinSet(nb**na), rows)


def uncurry(g: FinFun, A: SetLike, B: SetLike) -> FinFun:
    """Uncurry ``g : X -> (A -> B)`` into ``X x A -> B``."""
    na, nb = as_card(A), as_card(B)
    if g.cod.card != nb**na:
        raise FactorizationError(f"codomain {g.cod.card} is not the exponential {nb}^{na}")
    table = []
    for x in range(g.dom.card):
        table.extend(decode(g(x), na, nb))
    return FinFun(FinSet(g.dom.card * na), FinSet(nb), tuple(table))


@lru_cache(maxsize=None)
def _hom_tables(na: int, nb: int) -> tuple:
    return tuple(_cartesian(range(nb), repeat=na))


def enum_hom(A: SetLike, B: SetLike) -> list:
    """All functions A -> B, in codec order."""
    na, nb = as_card(A), as_card(B)
    return [FinFun(FinSet(na), FinSet(nb), t) for t in _hom_tables(na, nb)]


def hom_tables(A: SetLike, B: SetLike) -> tuple:
    """Raw tables of all functions A -> B, in codec order (cached)."""
    return _hom_tables(as_card(A), as_card(B))


def postcompose_code(g: _MapBase, n: int) -> LazyFun:
    """(n -> A) -> (n -> B), h |-> g . h, on codes."""
    na, nb = g.dom.card, g.cod.card
    return LazyFun(na**n, nb**n, lambda h: encode([g(v) for v in decode(h, n, na)], nb))


def precompose_code(f: _MapBase, base: int) -> LazyFun:
    """(A -> Y) -> (A' -> Y), h |-> h . f, for f : A' -> A, on codes."""
    na, nap = f.cod.card, f.dom.card
    tbl = [f(i) for i in range(nap)]

    def act(h):
        vals = decode(h, na, base)
        return encode([vals[i] for i in tbl], base)

    return LazyFun(base**na, base**nap, act)


# -- cartesian structural isomorphisms -------------------------------------


def lam(A: SetLike) -> FinFun:
    """lambda = pi_2 : 1 x A -> A."""
    return proj2(1, A)


def lam_inv(A: SetLike) -> FinFun:
    return tuple_(bang(A), identity(A))


def rho(A: SetLike) -> FinFun:
    """rho = pi_1 : A x 1 -> A."""
    return proj1(A, 1)


def rho_inv(A: SetLike) -> FinFun:
    return tuple_(identity(A), bang(A))


def alpha(A: SetLike, B: SetLike, C: SetLike) -> FinFun:
    """A x (B x C) -> (A x B) x C."""
    na, nb, nc = as_card(A), as_card(B), as_card(C)
    table = []
    for k in range(na * nb * nc):
        a, bc = divmod(k, nb * nc)
        b, c = divmod(bc, nc)
        table.append((a * nb + b) * nc + c)
    return FinFun(FinSet(na * nb * nc), FinSet(na * nb * nc), tuple(table))


def alpha_inv(A: SetLike, B: SetLike, C: SetLike) -> FinFun:
    na, nb, nc = as_card(A), as_card(B), as_card(C)
    table = []
    for k in range(na * nb * nc):
        ab, c = divmod(k, nc)
        a, b = divmod(ab, nb)
        table.append(a * nb * nc + b * nc + c)
    return FinFun(FinSet(na * nb * nc), FinSet(na * nb * nc), tuple(table))


class CartesianIsos(NamedTuple):
    lam: Callable
    lam_inv: Callable
    rho: Callable
    rho_inv: Callable
    alpha: Callable
    alpha_inv: Callable


def cartesian_isos() -> CartesianIsos:
    return CartesianIsos(lam, lam_inv, rho, rho_inv, alpha, alpha_inv)


def inject_right(Y: SetLike, Z: SetLike, z: int) -> FinFun:
    """y |-> (y, z) : Y -> Y x Z."""
    ny, nz = as_card(Y), as_card(Z)
    return FinFun(FinSet(ny), FinSet(ny * nz), tuple(y * nz + z for y in range(ny)))


def inject_left(A: SetLike, B: SetLike, a: int) -> FinFun:
    """b |-> (a, b) : B -> A x B."""
    na, nb = as_card(A), as_card(B)
    return FinFun(FinSet(nb), FinSet(na * nb), tuple(a * nb + b for b in range(nb)))


# -- exhaustive law checks ------------------------------------------------------------


def check_category_laws(window: int = 3):
    """Identity and associativity over every composable triple among sets of size <= window."""
    from .reports import Report

    report = Report(f"category laws [<= {window}]")
    sizes = range(window + 1)
    for a in sizes:
        for b in sizes:
            for f in enum_hom(a, b):
                report.check(compose(identity(b), f) == f and compose(f, identity(a)) == f,
                             lambda: f"identity law fails for {list(f.table)}:{a}->{b}")
    for a in sizes:
        for b in sizes:
            fs = enum_hom(a, b)
            for c in sizes:
                gfs = [(g, [compose(g, f) for f in fs]) for g in enum_hom(b, c)]
                for d in sizes:
                    for h in enum_hom(c, d):
                        for g, gf_list in gfs:
                            hg = compose(h, g)
                            for f, gf in zip(fs, gf_list):
                                report.check(compose(h, gf) == compose(hg, f),
                                             lambda: f"associativity fails at f={list(f.table)}, "
                                                     f"g={list(g.table)}, h={list(h.table)}")
    return report


def check_hom_enumeration(window: int = 3):
    from .reports import Report

    report = Report(f"hom enumeration [<= {window}]")
    for a in range(window + 1):
        for b in range(window + 1):
            homs = enum_hom(a, b)
            report.check(len(homs) == b**a, lambda: f"|Hom({a},{b})| = {len(homs)}, expected {b**a}")
            report.check(len({h.table for h in homs}) == len(homs), lambda: f"Hom({a},{b}) repeats a function")
            for i, h in enumerate(homs):
                report.check(fun_to_index(h) == i and index_to_fun(i, a, b) == h,
                             lambda: f"code of {list(h.table)} in Hom({a},{b}) is not {i}")
    return report


def check_products(window: int = 3):
    """``Hom(A, B x C) -> Hom(A, B) x Hom(A, C)`` is a bijection with inverse ``tuple_``."""
    from .reports import Report

    report = Report(f"product universal property [<= {window}]")
    sizes = range(window + 1)
    for a in sizes:
        for b in sizes:
            for c in sizes:
                p1, p2 = proj1(b, c), proj2(b, c)
                for f in enum_hom(a, b):
                    for g in enum_hom(a, c):
                        t = tuple_(f, g)
                        report.check(compose(p1, t) == f and compose(p2, t) == g,
                                     lambda: f"projections of tuple({list(f.table)}, {list(g.table)}) are wrong")
                # uniqueness: every h is the tuple of its projections
                for h in enum_hom(a, b * c):
                    report.check(tuple_(compose(p1, h), compose(p2, h)) == h,
                                 lambda: f"{list(h.table)}: {a} -> {b}x{c} is not determined by its projections")
    return report


def check_exponentials(window: int = 3):
    """``ev . (curry f x id) = f`` and ``curry(ev . (g x id)) = g``, exhaustively."""
    from .reports import Report

    report = Report(f"curry/ev laws [<= {window}]")
    sizes = range(window + 1)
    for x in sizes:
        for a in sizes:
            for b in sizes:
                e = ev(a, b)
                ida = identity(a)
                for f in enum_hom(x * a, b):
                    cf = curry(f, x, a)
                    report.check(compose(e, product_map(cf, ida)) == f,
                                 lambda: f"ev.(curry f x id) != f for f={list(f.table)}")
                    report.check(uncurry(cf, a, b) == f, lambda: f"uncurry(curry f) != f for f={list(f.table)}")
                for g in enum_hom(x, b**a):
                    report.check(curry(compose(e, product_map(g, ida)), x, a) == g,
                                 lambda: f"curry(ev.(g x id)) != g for g={list(g.table)}")
    return report


def check_cartesian_isos(window: int = 3):
    from .reports import Report

    report = Report(f"cartesian isomorphisms [<= {window}]")
    sizes = range(window + 1)
    for a in sizes:
        report.check(is_identity(compose(lam_inv(a), lam(a))) and is_identity(compose(lam(a), lam_inv(a))),
                     lambda: f"lambda_{a} is not inverse to lambda^-1")
        report.check(is_identity(compose(rho_inv(a), rho(a))) and is_identity(compose(rho(a), rho_inv(a))),
                     lambda: f"rho_{a} is not inverse to rho^-1")
        for b in sizes:
            for c in sizes:
                f, g = alpha(a, b, c), alpha_inv(a, b, c)
                report.check(is_identity(compose(g, f)) and is_identity(compose(f, g)),
                             lambda: f"alpha({a},{b},{c}) is not inverse to alpha^-1")
    return report
