"""Exact bivariate polynomials in p, q and the p,q-analogues built on them.

Coefficients are Python ints, so nothing ever overflows and nothing is ever
approximated.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Mapping


class BivarPoly:
    """Immutable polynomial ``sum c * p**a * q**b`` with integer coefficients.

    Zero coefficients are never stored. Instances hash and compare by their
    term map, so they can be used as dict keys and compared exactly.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in term p^{a}q^{b}")
            c = int(c)
            if c:
                clean[(int(a), int(b))] = c
        self._terms = clean
        self._hash = None

    # construction helpers

    @classmethod
    def zero(cls) -> BivarPoly:
        return cls()

    @classmethod
    def one(cls) -> BivarPoly:
        return cls({(0, 0): 1})

    @classmethod
    def monomial(cls, dp: int, dq: int, coeff: int = 1) -> BivarPoly:
        return cls({(dp, dq): coeff})

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> BivarPoly:
        """Generating polynomial of a stream of exponent pairs."""
        acc: dict[tuple[int, int], int] = {}
        for a, b in pairs:
            acc[(a, b)] = acc.get((a, b), 0) + 1
        return cls(acc)

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    # arithmetic

    def __add__(self, other: BivarPoly | int) -> BivarPoly:
        other = _coerce(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return BivarPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> BivarPoly:
        return BivarPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: BivarPoly | int) -> BivarPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: BivarPoly | int) -> BivarPoly:
        return _coerce(other) - self

    def __mul__(self, other: BivarPoly | int) -> BivarPoly:
        other = _coerce(other)
        acc: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                acc[k] = acc.get(k, 0) + c1 * c2
        return BivarPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BivarPoly:
        if e < 0:
            raise ValueError("negative power")
        out, base = BivarPoly.one(), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BivarPoly.one() * other
        if not isinstance(other, BivarPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # queries

    def swap_vars(self) -> BivarPoly:
        return BivarPoly({(b, a): c for (a, b), c in self._terms.items()})

    def is_symmetric(self) -> bool:
        return self == self.swap_vars()

    def evaluate(self, p: int, q: int) -> int:
        return sum(c * p**a * q**b for (a, b), c in self._terms.items())

    def coeff(self, dp: int, dq: int) -> int:
        return self._terms.get((dp, dq), 0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        """Terms as ``(dp, dq, c)`` by total degree descending, then dp descending."""
        keys = sorted(self._terms, key=lambda k: (-(k[0] + k[1]), -k[0]))
        return [(a, b, self._terms[(a, b)]) for a, b in keys]

    # rendering

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for i, (a, b, c) in enumerate(self.sorted_terms()):
            mono = _mono(a, b)
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"BivarPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {"terms": [{"p": a, "q": b, "c": str(c)} for a, b, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> BivarPoly:
        return cls({(t["p"], t["q"]): int(t["c"]) for t in obj["terms"]})


def _mono(a: int, b: int) -> str:
    s = ""
    if a:
        s += "p" if a == 1 else f"p^{a}"
    if b:
        s += "q" if b == 1 else f"q^{b}"
    return s


def _coerce(x: BivarPoly | int) -> BivarPoly:
    if isinstance(x, BivarPoly):
        return x
    if isinstance(x, int):
        return BivarPoly({(0, 0): x})
    raise TypeError(f"cannot combine BivarPoly with {type(x).__name__}")


P = BivarPoly.monomial(1, 0)
Q = BivarPoly.monomial(0, 1)
ZERO = BivarPoly.zero()
ONE = BivarPoly.one()


def add(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a + b


def mul(a: BivarPoly, b: BivarPoly) -> BivarPoly:
    return a * b


def swap_vars(a: BivarPoly) -> BivarPoly:
    return a.swap_vars()


@lru_cache(maxsize=None)
def pq_integer(r: int) -> BivarPoly:
    """``[r]_{p,q} = p^(r-1) + p^(r-2) q + ... + q^(r-1)``; zero for r = 0."""
    if r < 0:
        raise ValueError("pq_integer needs r >= 0")
    return BivarPoly({(r - 1 - j, j): 1 for j in range(r)})


@lru_cache(maxsize=None)
def pq_factorial(r: int) -> BivarPoly:
    if r < 0:
        raise ValueError("pq_factorial needs r >= 0")
    if r == 0:
        return ONE
    return pq_factorial(r - 1) * pq_integer(r)


@lru_cache(maxsize=None)
def pq_gaussian(n: int, k: int) -> BivarPoly:
    """p,q-binomial coefficient [n choose k], zero outside ``0 <= k <= n``.

    Uses G(n,k) = p^k G(n-1,k) + q^(n-k) G(n-1,k-1), so no division occurs.
    Negative n is accepted and yields zero, which lets callers pass raw
    capacities straight through.
    """
    if k < 0 or n < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    return (BivarPoly.monomial(k, 0) * pq_gaussian(n - 1, k)
            + BivarPoly.monomial(0, n - k) * pq_gaussian(n - 1, k - 1))


def binomial(n: int, k: int) -> int:
    # math.comb rejects negative n; the capacity vectors can go negative
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)
