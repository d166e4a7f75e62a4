import itertools
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from moonfill.qpoly import (
    ONE,
    P,
    Q,
    ZERO,
    BivarPoly,
    add,
    mul,
    pq_factorial,
    pq_gaussian,
    pq_integer,
    swap_vars,
)


def test_add_examples():
    assert add(P + Q, ZERO) == P + Q
    assert add(P + Q, P - Q) == 2 * P
    assert (P + Q + P - Q).terms == {(1, 0): 2}


def test_add_union_of_terms():
    a = P**2 + 2 * Q
    b = 2 * P * Q**2
    got = add(a, b)
    assert got == BivarPoly({(2, 0): 1, (1, 2): 2, (0, 1): 2})
    for x, y in [(2, 3), (5, -7)]:
        assert got.evaluate(x, y) == a.evaluate(x, y) + b.evaluate(x, y)


def test_mul_examples():
    assert mul(P + Q, ONE) == P + Q
    assert mul(P + Q, P**2 + P * Q + Q**2) == P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3
    assert mul(P + Q, P - Q) == P**2 - Q**2


def test_zero_coefficients_are_pruned():
    assert (P - P).terms == {}
    assert BivarPoly({(1, 1): 0}) == ZERO
    assert not ZERO


def test_pq_integer():
    assert pq_integer(0) == ZERO
    assert pq_integer(1) == ONE
    assert pq_integer(3) == P**2 + P * Q + Q**2


def test_pq_factorial():
    assert pq_factorial(0) == ONE
    assert pq_factorial(2) == P + Q
    assert pq_factorial(3) == (P + Q) * (P**2 + P * Q + Q**2)
    assert pq_factorial(3) == P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3


def _factorial_quotient_at(n, k, x, y):
    f = lambda r: Fraction(pq_factorial(r).evaluate(x, y))
    return f(n) / (f(k) * f(n - k))


def _word_oracle(n, k):
    """Sum over 0/1 words with k ones of p^(#01 pairs) q^(#10 pairs)."""
    acc = {}
    for ones in itertools.combinations(range(n), k):
        s = set(ones)
        a = sum(1 for i in range(n) for j in range(i + 1, n) if i not in s and j in s)
        b = sum(1 for i in range(n) for j in range(i + 1, n) if i in s and j not in s)
        acc[(a, b)] = acc.get((a, b), 0) + 1
    return BivarPoly(acc)


def test_pq_gaussian_examples():
    assert pq_gaussian(2, 1) == P + Q
    assert pq_gaussian(2, 1) * pq_factorial(1) * pq_factorial(1) == pq_factorial(2)
    assert pq_gaussian(3, 2) == pq_integer(3)
    want = P**4 + P**3 * Q + 2 * P**2 * Q**2 + P * Q**3 + Q**4
    assert pq_gaussian(4, 2) == want
    for x, y in [(2, 3), (5, 7)]:
        assert want.evaluate(x, y) == _factorial_quotient_at(4, 2, x, y)
    assert pq_gaussian(5, 7) == ZERO
    assert pq_gaussian(3, -1) == ZERO
    assert pq_gaussian(-2, 0) == ZERO
    assert pq_gaussian(6, 0) == ONE == pq_gaussian(6, 6)


@pytest.mark.parametrize("n", range(9))
def test_gaussian_identities(n):
    for k in range(n + 1):
        g = pq_gaussian(n, k)
        assert g * pq_factorial(k) * pq_factorial(n - k) == pq_factorial(n)
        assert swap_vars(g) == g
        assert g.evaluate(1, 1) == comb(n, k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(7) for k in range(n + 1)])
def test_gaussian_matches_word_enumeration(n, k):
    assert pq_gaussian(n, k) == _word_oracle(n, k)


def test_swap_vars():
    assert swap_vars(P**2 + 2 * Q) == Q**2 + 2 * P
    assert swap_vars(P + Q) == P + Q
    x = P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3
    assert swap_vars(x) == x and x.is_symmetric()


def test_rendering():
    assert str(P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3) == "p^3 + 2p^2q + 2pq^2 + q^3"
    assert str(P**2 + 2 * Q) == "p^2 + 2q"
    assert str(P - Q) == "p - q"
    assert str(-P + 3) == "-p + 3"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(1 + P + Q) == "p + q + 1"


def test_json_roundtrip():
    x = P**3 - 12345678901234567890 * Q
    obj = x.to_json()
    assert obj == {"terms": [{"p": 3, "q": 0, "c": "1"}, {"p": 0, "q": 1, "c": "-12345678901234567890"}]}
    assert BivarPoly.from_json(obj) == x


polys = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-50, 50), max_size=6
).map(BivarPoly)


@given(polys, polys, polys)
def test_commutative_ring(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO


@given(polys, st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, x, y):
    b = a * a + P
    assert b.evaluate(x, y) == a.evaluate(x, y) ** 2 + x


@given(polys)
def test_no_zero_terms_stored(a):
    assert all(c != 0 for c in a.terms.values())
    assert swap_vars(swap_vars(a)) == a
