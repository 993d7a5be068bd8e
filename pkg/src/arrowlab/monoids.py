"""Monoids in the three tensors: monads, idioms and arrows.

Each multiplication is written as a wedge on coend generators and reaches the
carrier through the tensor's normal form; :func:`check_monoid_laws`
re-derives every component by factorization, so dinaturality is checked
rather than assumed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ArrowlabError, DinaturalityError, UnknownNameError
from .finset import FinFun, FinSet, decode, encode
from .functors import check_naturality, inclusion_functor, maybe, reader, writer
from .monoidal import (
    DEFAULT_BOUND,
    MonoidalTag,
    Structure,
    WedgeNat,
    as_tag,
    same_tag,
    tensor,
    tensor_map,
    unit_object,
    window_points,
)
from .nat import Nat, point_card
from .profunctors import CayleyProf, KleisliMaybeHand, check_prof_naturality, check_strong_naturality, hom_prof
from .reports import Report


@dataclass
class MonoidRep:
    tag: MonoidalTag
    carrier: object
    mult: Nat
    unit_map: Nat
    name: str = "M"
    bound: int = DEFAULT_BOUND

    @property
    def m(self) -> Nat:
        return self.mult

    @property
    def e(self) -> Nat:
        return self.unit_map

    @property
    def structure(self) -> Structure:
        return Structure(self.tag, self.bound)

    def __repr__(self):
        return f"MonoidRep({self.name}, {self.tag.value}, carrier={self.carrier.name})"


def monoid_from_wedge(tag, carrier, wedge, unit_fn, name, bound: int = DEFAULT_BOUND) -> MonoidRep:
    tag = as_tag(tag)
    T = tensor(tag, carrier, carrier, bound=bound)
    mult = WedgeNat(T, carrier, wedge, name=f"m[{name}]")
    unit = Nat(unit_object(tag), carrier, unit_fn, name=f"e[{name}]")
    return MonoidRep(tag, carrier, mult, unit, name=name, bound=bound)


def _check_monoid_table(table, unit):
    m = len(table)
    if not 0 <= unit < m or any(len(row) != m or not all(0 <= v < m for v in row) for row in table):
        raise ValueError("monoid table must be square with entries and unit in range")
    for a in range(m):
        if table[unit][a] != a or table[a][unit] != a:
            raise ValueError(f"{unit} is not a two-sided unit (fails at {a})")
        for b in range(m):
            for c in range(m):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    raise ValueError(f"monoid table is not associative at ({a}, {b}, {c})")


OR2 = ((0, 1), (1, 1))


# -- monads (substitution tensor) --------------------------------------------


def maybe_monad(bound: int = DEFAULT_BOUND) -> MonoidRep:
    M = maybe()

    def join(X, W, a, k):
        # (Just c, k) |-> k(c);  (Nothing, k) |-> Nothing
        return decode(k, W, X + 1)[a] if a < W else X

    return monoid_from_wedge("subst", M, join, lambda X, x: x, "maybe-monad", bound)


def reader_monad(E: int = 2, bound: int = DEFAULT_BOUND) -> MonoidRep:
    R = reader(E)

    def join(X, W, a, k):
        av = decode(a, E, W)
        ks = decode(k, W, X**E)
        return encode([decode(ks[av[e]], E, X)[e] for e in range(E)], X)

    return monoid_from_wedge("subst", R, join, lambda X, x: encode([x] * E, X), f"reader{E}-monad", bound)


def writer_monad(table=OR2, unit: int = 0, name: str = "writer-or2", bound: int = DEFAULT_BOUND) -> MonoidRep:
    _check_monoid_table(table, unit)
    m = len(table)
    F = writer(m, name=name)

    def join(X, W, a, k):
        w, c = divmod(a, W)
        w2, x = divmod(decode(k, W, m * X)[c], X)
        return table[w][w2] * X + x

    return monoid_from_wedge("subst", F, join, lambda X, x: unit * X + x, f"{name}-monad", bound)


# -- idioms (Day tensor) -------------------------------------------------------


def maybe_idiom(bound: int = DEFAULT_BOUND) -> MonoidRep:
    M = maybe()

    def ap(X, W, a, u):
        if a < W and u < X**W:
            return decode(u, W, X)[a]
        return X

    return monoid_from_wedge("day", M, ap, lambda X, x: x, "maybe-idiom", bound)


def reader_idiom(E: int = 2, bound: int = DEFAULT_BOUND) -> MonoidRep:
    R = reader(E)

    def ap(X, W, a, u):
        av = decode(a, E, W)
        uv = decode(u, E, X**W)
        return encode([decode(uv[e], W, X)[av[e]] for e in range(E)], X)

    return monoid_from_wedge("day", R, ap, lambda X, x: encode([x] * E, X), f"reader{E}-idiom", bound)


def writer_idiom(table=OR2, unit: int = 0, name: str = "writer-or2", bound: int = DEFAULT_BOUND) -> MonoidRep:
    _check_monoid_table(table, unit)
    m = len(table)
    F = writer(m, name=name)

    def ap(X, W, a, u):
        w, c = divmod(a, W)
        w2, h = divmod(u, X**W)
        return table[w][w2] * X + decode(h, W, X)[c]

    return monoid_from_wedge("day", F, ap, lambda X, x: unit * X + x, f"{name}-idiom", bound)


def trivial_monoid(tag, bound: int = DEFAULT_BOUND) -> MonoidRep:
    """The unit object with ``m = lambda`` and ``e = id``."""
    tag = as_tag(tag)
    if tag is MonoidalTag.BENABOU:
        return hom_arrow(bound)
    I = inclusion_functor()
    lam = Structure(tag, bound).lam(I)
    return MonoidRep(tag, I, lam, Nat(I, I, lambda X, x: x, name="e[trivial]"),
                     name=f"trivial-{tag.value}", bound=bound)


# -- arrows (Bénabou tensor) ---------------------------------------------------


def _compose_codes(h, X, W, h2, Y):
    """Code of ``h2 . h`` for ``h : X -> W`` and ``h2 : W -> Y``."""
    hv = decode(h, X, W)
    h2v = decode(h2, W, Y)
    return encode([h2v[v] for v in hv], Y)


def hom_arrow(bound: int = DEFAULT_BOUND) -> MonoidRep:
    def comp(point, W, h, h2):
        X, Y = point
        return _compose_codes(h, X, W, h2, Y)

    return monoid_from_wedge("benabou", hom_prof(), comp, lambda point, h: h, "hom-arrow", bound)


def kleisli_maybe_arrow(bound: int = DEFAULT_BOUND) -> MonoidRep:
    """``X -> Maybe Y`` with ``arr h = Just . h`` and Kleisli composition, written by hand."""

    def comp(point, W, p, q):
        X, Y = point
        qv = decode(q, W, Y + 1)
        return encode([Y if v == W else qv[v] for v in decode(p, X, W + 1)], Y + 1)

    def arr(point, h):
        X, Y = point
        return encode(decode(h, X, Y), Y + 1)

    return monoid_from_wedge("benabou", KleisliMaybeHand(), comp, arr, "kleisli-maybe-arrow", bound)


def static_maybe_arrow(bound: int = DEFAULT_BOUND) -> MonoidRep:
    """``Maybe(X -> Y)``: composite is ``Just (v . u)`` when both sides are ``Just``."""

    def comp(point, W, u, v):
        X, Y = point
        if u < W**X and v < Y**W:
            return _compose_codes(u, X, W, v, Y)
        return Y**X

    return monoid_from_wedge("benabou", CayleyProf(maybe(), name="cayley-maybe"), comp,
                             lambda point, h: h, "static-maybe-arrow", bound)


def static_writer_arrow(table=OR2, unit: int = 0, name: str = "writer-or2",
                        bound: int = DEFAULT_BOUND) -> MonoidRep:
    """``M x (X -> Y)``: logs multiply, functions compose."""
    _check_monoid_table(table, unit)
    m = len(table)
    F = writer(m, name=name)

    def comp(point, W, u, v):
        X, Y = point
        w, h = divmod(u, W**X)
        w2, h2 = divmod(v, Y**W)
        return table[w][w2] * Y**X + _compose_codes(h, X, W, h2, Y)

    def arr(point, h):
        X, Y = point
        return unit * Y**X + h

    return monoid_from_wedge("benabou", CayleyProf(F, name=f"cayley-{name}"), comp, arr,
                             f"static-{name}-arrow", bound)


class _CorruptedMult(Nat):
    def __init__(self, mult: Nat):
        def fn(point, c):
            v = mult(point, c)
            if point_card(mult.target, point) >= 2 and v in (0, 1):
                return 1 - v
            return v

        super().__init__(mult.source, mult.target, fn, name=f"corrupted({mult.name})")


def corrupted_monoid(M: MonoidRep) -> MonoidRep:
    """``M`` with outputs 0 and 1 of the multiplication swapped wherever both exist."""
    return MonoidRep(M.tag, M.carrier, _CorruptedMult(M.mult), M.unit_map, name=f"corrupted-{M.name}", bound=M.bound)


# -- law checkers ----------------------------------------------------------------


def _describe(T, point, c):
    try:
        W, a, b = T.rep(point, c)
        return f"class {c} at {point} with representative (W={W}, {a}, {b})"
    except ArrowlabError:
        return f"class {c} at {point}"


def check_monoid_laws(M: MonoidRep, window: int = 2, naturality: bool = True) -> Report:
    """``lambda = m.(e (x) id)``, ``rho = m.(id (x) e)`` and associativity, on every carrier element."""
    report = Report(f"monoid laws [{M.name}]")
    st = M.structure
    C, m, e = M.carrier, M.mult, M.unit_map
    T2 = m.source
    I = st.unit
    points = window_points(M.tag, window)

    if isinstance(m, WedgeNat):
        for point in points:
            try:
                fact = m.factorized(point)
                report.check(fact.table == m.component(point).table,
                             lambda: f"multiplication disagrees with its factorization at {point}")
            except DinaturalityError as exc:
                report.fail(f"multiplication wedge is not dinatural at {point}: {exc}")

    left_src = st.tensor(I, C)
    lam, e_id = st.lam(C), tensor_map(left_src, e, None, target=T2)
    right_src = st.tensor(C, I)
    rho, id_e = st.rho(C), tensor_map(right_src, None, e, target=T2)
    assoc_src = st.tensor(C, st.tensor(C, C))
    al = st.alpha(C, C, C)
    m_id = tensor_map(al.target, m, None, target=T2)
    id_m = tensor_map(assoc_src, None, m, target=T2)

    for point in points:
        for c in range(left_src.size(point)):
            l, r = lam(point, c), m(point, e_id(point, c))
            report.check(l == r, lambda: f"left unit law fails at {_describe(left_src, point, c)}: {l} != {r}")
        for c in range(right_src.size(point)):
            l, r = rho(point, c), m(point, id_e(point, c))
            report.check(l == r, lambda: f"right unit law fails at {_describe(right_src, point, c)}: {l} != {r}")
        for c in range(assoc_src.size(point)):
            l = m(point, m_id(point, al(point, c)))
            r = m(point, id_m(point, c))
            report.check(l == r, lambda: f"associativity fails at {_describe(assoc_src, point, c)}: {l} != {r}")

    if naturality:
        if M.tag is MonoidalTag.BENABOU:
            report.absorb(check_strong_naturality(e, window), "unit: ")
            report.absorb(check_strong_naturality(m, window), "multiplication: ")
        else:
            report.absorb(check_naturality(e, window), "unit: ")
            report.absorb(check_naturality(m, window), "multiplication: ")
    return report


def check_monoid_morphism(f: Nat, M: MonoidRep, N: MonoidRep, window: int = 2) -> Report:
    """``f . e_M = e_N`` and ``f . m_M = m_N . (f (x) f)``."""
    same_tag(M, N)
    report = Report(f"monoid morphism [{f.name}: {M.name} -> {N.name}]")
    I = unit_object(M.tag)
    ff = tensor_map(M.mult.source, f, f, target=N.mult.source)
    for point in window_points(M.tag, window):
        for x in range(point_card(I, point)):
            l, r = f(point, M.e(point, x)), N.e(point, x)
            report.check(l == r, lambda: f"unit square fails at {point}, element {x}: {l} != {r}")
        for c in range(M.mult.source.size(point)):
            l, r = f(point, M.m(point, c)), N.m(point, ff(point, c))
            report.check(l == r, lambda: f"multiplication square fails at "
                                         f"{_describe(M.mult.source, point, c)}: {l} != {r}")
    return report


def check_monoid_nat(f: Nat, tag, window: int = 2) -> Report:
    if as_tag(tag) is MonoidalTag.BENABOU:
        return check_prof_naturality(f, window)
    return check_naturality(f, window)


_MONOIDS = {
    "maybe-monad": maybe_monad,
    "reader2-monad": lambda bound=DEFAULT_BOUND: reader_monad(2, bound),
    "writer-or2-monad": lambda bound=DEFAULT_BOUND: writer_monad(bound=bound),
    "maybe-idiom": maybe_idiom,
    "reader2-idiom": lambda bound=DEFAULT_BOUND: reader_idiom(2, bound),
    "writer-or2-idiom": lambda bound=DEFAULT_BOUND: writer_idiom(bound=bound),
    "hom-arrow": hom_arrow,
    "kleisli-maybe-arrow": kleisli_maybe_arrow,
    "static-maybe-arrow": static_maybe_arrow,
    "static-writer-or2-arrow": lambda bound=DEFAULT_BOUND: static_writer_arrow(bound=bound),
}


def monoid_names() -> list:
    return list(_MONOIDS)


def library_monoid(name: str, bound: int = DEFAULT_BOUND) -> MonoidRep:
    try:
        return _MONOIDS[name](bound=bound)
    except KeyError:
        raise UnknownNameError(f"unknown monoid instance {name!r}; known: {', '.join(_MONOIDS)}") from None
