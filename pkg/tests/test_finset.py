from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arrowlab.errors import CompositionError, FactorizationError
from arrowlab.finset import (
    FinFun,
    FinSet,
    alpha,
    alpha_inv,
    check_cartesian_isos,
    check_category_laws,
    check_exponentials,
    check_hom_enumeration,
    check_products,
    compose,
    curry,
    decode,
    encode,
    enum_hom,
    ev,
    fun_to_index,
    identity,
    index_to_fun,
    inject_left,
    inject_right,
    lam,
    pair_index,
    proj1,
    proj2,
    rho,
    tuple_,
    uncurry,
    unpair_index,
)

sizes = st.integers(min_value=0, max_value=3)
pos = st.integers(min_value=1, max_value=3)


@st.composite
def funs(draw, dom=None, cod=None):
    a = draw(sizes) if dom is None else dom
    b = draw(pos) if cod is None else cod
    return FinFun(FinSet(a), FinSet(b), tuple(draw(st.lists(st.integers(0, b - 1), min_size=a, max_size=a))))


# -- oracles written out by hand ---------------------------------------------------


def test_codes_are_big_endian():
    # f : 3 -> 2 with table (1, 0, 1) is 1*4 + 0*2 + 1
    assert encode([1, 0, 1], 2) == 5
    assert decode(5, 3, 2) == (1, 0, 1)
    assert fun_to_index(FinFun(FinSet(3), FinSet(2), (1, 0, 1))) == 5


def test_product_index_is_row_major():
    assert [pair_index(a, b, 2, 3) for a in range(2) for b in range(3)] == list(range(6))
    assert unpair_index(4, 2, 3) == (1, 1)


def test_enum_hom_order_matches_codes():
    homs = enum_hom(2, 2)
    assert [h.table for h in homs] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(enum_hom(0, 3)) == 1 and len(enum_hom(3, 0)) == 0
    assert len(enum_hom(0, 0)) == 1


def test_ev_table_2_2():
    # (A -> B) x A with A = B = 2, functions in code order (00, 01, 10, 11)
    assert ev(2, 2).table == (0, 0, 0, 1, 1, 0, 1, 1)


def test_curry_example():
    # f(x, a) = x xor a on 2 x 2
    f = FinFun(FinSet(4), FinSet(2), (0, 1, 1, 0))
    assert curry(f, 2, 2).table == (encode([0, 1], 2), encode([1, 0], 2))


def test_structural_isos_are_index_identities():
    assert lam(3).table == (0, 1, 2)
    assert rho(3).table == (0, 1, 2)
    # alpha on A x (B x C) -> (A x B) x C is the identity on row-major indices
    assert alpha(2, 2, 3).table == tuple(range(12))
    assert compose(alpha_inv(2, 2, 3), alpha(2, 2, 3)) == identity(12)


def test_injections():
    assert inject_right(3, 2, 1).table == (1, 3, 5)
    assert inject_left(2, 3, 1).table == (3, 4, 5)


def test_composition_checks_types():
    f = FinFun(FinSet(2), FinSet(3), (0, 2))
    with pytest.raises(CompositionError):
        compose(f, f)


def test_curry_checks_domain():
    with pytest.raises(FactorizationError):
        curry(FinFun(FinSet(3), FinSet(2), (0, 0, 0)), 2, 2)


# -- exhaustive checkers --------------------------------------------------------------


@pytest.mark.parametrize("checker", [check_category_laws, check_hom_enumeration, check_products,
                                     check_exponentials, check_cartesian_isos])
def test_exhaustive_checkers_pass(checker):
    report = checker(3)
    assert report.ok, report.summary()
    assert report.checked > 0


# -- properties --------------------------------------------------------------------------


@given(st.data())
def test_associativity(data):
    a, b, c, d = (data.draw(pos) for _ in range(4))
    f = data.draw(funs(a, b))
    g = data.draw(funs(b, c))
    h = data.draw(funs(c, d))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)


@given(sizes, pos)
def test_index_roundtrip(a, b):
    for i in range(b**a):
        assert fun_to_index(index_to_fun(i, a, b)) == i


@given(st.data())
def test_tuple_is_unique(data):
    a, b, c = data.draw(sizes), data.draw(pos), data.draw(pos)
    f, g = data.draw(funs(a, b)), data.draw(funs(a, c))
    t = tuple_(f, g)
    assert compose(proj1(b, c), t) == f and compose(proj2(b, c), t) == g
    matches = [h for h in enum_hom(a, b * c) if compose(proj1(b, c), h) == f and compose(proj2(b, c), h) == g]
    assert matches == [t]


@given(st.data())
def test_curry_uncurry(data):
    x, a, b = data.draw(sizes), data.draw(sizes), data.draw(pos)
    f = data.draw(funs(x * a, b))
    assert uncurry(curry(f, x, a), a, b) == f


@given(st.lists(st.integers(0, 2), max_size=4))
def test_encode_decode(vals):
    assert list(decode(encode(vals, 3), len(vals), 3)) == vals


def test_hom_sizes_exhaustive():
    for a, b in itertools.product(range(4), repeat=2):
        assert len(enum_hom(a, b)) == b**a
