from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arrowlab.errors import UnknownNameError
from arrowlab.finset import decode, encode
from arrowlab.monoids import (
    check_monoid_laws,
    check_monoid_morphism,
    corrupted_monoid,
    library_monoid,
    monoid_names,
    trivial_monoid,
    writer_idiom,
    writer_monad,
)
from arrowlab.nat import Nat

# {e, a, b} with xy = y for x, y in {a, b}: associative, not commutative
RIGHT_ZERO = ((0, 1, 2), (1, 1, 2), (2, 1, 2))


def test_names():
    assert len(monoid_names()) == 10
    with pytest.raises(UnknownNameError):
        library_monoid("list-monad")


@pytest.mark.parametrize("name", monoid_names())
def test_library_monoid_laws(name):
    report = check_monoid_laws(library_monoid(name), 2)
    assert report.ok, report.summary()


@pytest.mark.parametrize("tag", ["day", "subst", "benabou"])
def test_trivial_monoid(tag):
    assert check_monoid_laws(trivial_monoid(tag), 1).ok


@pytest.mark.parametrize("name", ["maybe-monad", "maybe-idiom", "kleisli-maybe-arrow", "hom-arrow"])
def test_corrupted_multiplication_rejected(name):
    report = check_monoid_laws(corrupted_monoid(library_monoid(name)), 2)
    assert not report.ok and report.counterexample


def test_maybe_join_by_hand():
    M = library_monoid("maybe-monad")
    T = M.mult.source
    X = 2
    for W in range(3):
        for a in range(W + 1):
            for k in range((X + 1) ** W):
                expected = X if a == W else decode(k, W, X + 1)[a]
                assert M.m(X, T.class_of(X, W, a, k)) == expected


def test_maybe_ap_by_hand():
    M = library_monoid("maybe-idiom")
    T = M.mult.source
    X = 2
    # (Just 1, Just f) with f = [1, 0] on 2 gives Just 0; any Nothing gives Nothing
    f = encode([1, 0], 2)
    assert M.m(X, T.class_of(X, 2, 1, f)) == 0
    assert M.m(X, T.class_of(X, 2, 2, f)) == X


def test_kleisli_composition_agrees_with_join():
    A = library_monoid("kleisli-maybe-arrow")
    J = library_monoid("maybe-monad")
    T, S = A.mult.source, J.mult.source
    for X in range(3):
        for Y in range(3):
            for W in range(3):
                for p in range((W + 1) ** X):
                    for q in range((Y + 1) ** W):
                        vals = [J.m(Y, S.class_of(Y, W, v, q)) for v in decode(p, X, W + 1)]
                        assert A.m((X, Y), T.class_of((X, Y), W, p, q)) == encode(vals, Y + 1)


def test_arr_is_just():
    A = library_monoid("kleisli-maybe-arrow")
    h = encode([1, 0], 2)
    assert decode(A.e((2, 2), h), 2, 3) == (1, 0)


def test_writer_log_order():
    # the left factor's log comes first: a then b gives b, b then a gives a
    M = writer_monad(RIGHT_ZERO, name="rz")
    T = M.mult.source
    X = 1
    inner_b = encode([2 * X + 0], 3 * X)  # k : 1 -> Writer 1 writes b
    assert M.m(X, T.class_of(X, 1, 1 * 1 + 0, inner_b)) == 2 * X
    inner_a = encode([1 * X + 0], 3 * X)
    assert M.m(X, T.class_of(X, 1, 2 * 1 + 0, inner_a)) == 1 * X


@pytest.mark.parametrize("mk", [writer_monad, writer_idiom])
def test_non_commutative_writer_laws(mk):
    assert check_monoid_laws(mk(RIGHT_ZERO, name="rz"), 2).ok


def test_writer_table_validated():
    with pytest.raises(ValueError):
        writer_monad(((0, 1), (1, 2)))
    with pytest.raises(ValueError):
        writer_idiom(((1, 0), (0, 1)))


def test_identity_is_a_morphism():
    M = library_monoid("maybe-monad")
    ident = Nat(M.carrier, M.carrier, lambda X, x: x, name="id")
    assert check_monoid_morphism(ident, M, M, 2).ok


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["maybe-monad", "reader2-monad", "writer-or2-monad"]), st.integers(0, 2), st.data())
def test_unit_then_multiply(name, X, data):
    # the class (e(0) in F 1, k = [x]) multiplies to x
    M = library_monoid(name)
    n = M.carrier.card(X)
    if n == 0:
        return
    x = data.draw(st.integers(0, n - 1))
    T = M.mult.source
    unit_elem = M.e(1, 0)
    ident = encode([x], n)
    assert M.m(X, T.class_of(X, 1, unit_elem, ident)) == x
