"""Transformations between functors or profunctors, given elementwise.

A *point* is an object of the indexing category: an ``int`` for functors on
finite sets, an ``(X, Y)`` pair for profunctors.  A transformation maps an
element index of ``source(point)`` to one of ``target(point)``.
"""
from __future__ import annotations

from typing import Callable

from .errors import NotInvertibleError
from .finset import FinFun, FinSet


def point_card(rep, point) -> int:
    if isinstance(point, tuple):
        return rep.card(*point)
    return rep.card(point)


class Nat:
    def __init__(self, source, target, fn: Callable, name: str = "tau"):
        self.source = source
        self.target = target
        self.fn = fn
        self.name = name

    def __call__(self, point, x: int) -> int:
        return self.fn(point, x)

    def component(self, point) -> FinFun:
        n = point_card(self.source, point)
        return FinFun(FinSet(n), FinSet(point_card(self.target, point)),
                      tuple(self.fn(point, x) for x in range(n)))

    def then(self, other: "Nat") -> "Nat":
        return vcompose(other, self)

    def __repr__(self):
        return f"Nat({self.name}: {getattr(self.source, 'name', '?')} -> {getattr(self.target, 'name', '?')})"


def identity_nat(rep) -> Nat:
    return Nat(rep, rep, lambda p, x: x, name=f"id[{rep.name}]")


def vcompose(second: Nat, first: Nat, name: str = None) -> Nat:
    """``second . first``."""
    f1, f2 = first.fn, second.fn
    return Nat(first.source, second.target, lambda p, x: f2(p, f1(p, x)),
               name=name or f"{second.name}.{first.name}")


def compose_all(*nats: Nat, name: str = None) -> Nat:
    """Right-to-left composite of ``nats``, like function composition."""
    result = nats[-1]
    for n in reversed(nats[:-1]):
        result = vcompose(n, result)
    if name:
        result.name = name
    return result


def invert(nat: Nat, name: str = None) -> Nat:
    """Pointwise inverse, built by tabulating each component on first use."""
    cache = {}

    def fn(point, y):
        inv = cache.get(point)
        if inv is None:
            comp = nat.component(point)
            if not comp.is_bijective():
                raise NotInvertibleError(
                    f"{nat.name} is not invertible at {point}: "
                    f"{comp.dom.card} -> {comp.cod.card}, "
                    f"{'injective' if comp.is_injective() else 'not injective'}",
                    component=(nat.name, point),
                )
            inv = comp.inverse().table
            cache[point] = inv
        return inv[y]

    return Nat(nat.target, nat.source, fn, name=name or f"{nat.name}^-1")
