"""Exhaustive invariant battery over small moon polyominoes.

Every check compares two independently computed quantities and records a
witness on disagreement. The battery backs both ``moonfill verify`` and the
acceptance tests.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from . import arcs
from .biject import (
    composition_space,
    count_closed,
    distribution_closed,
    from_compositions,
    h_vector,
    stats_from_gaps,
    to_compositions,
)
from .fill import (
    CellState,
    Filling01,
    arbitrary_distribution,
    chain_stats,
    coloring,
    distribution_of,
    empty_lines,
    enumerate_column_injective,
    enumerate_row_constrained,
    stats_via_coloring,
)
from .involution import phi, phi_via_g
from .qpoly import BivarPoly
from .shape import MoonPolyomino, ShapeError, delta, enumerate_shapes, from_rows, polyomino_from_rows

INVARIANTS = (
    "oracle_agreement",
    "ones_are_free",
    "free_count",
    "bijection_roundtrip",
    "bijection_count",
    "stats_from_gaps",
    "closed_eq_brute",
    "count_closed",
    "symmetry",
    "sum_over_A",
    "involution",
    "stat_swap",
    "ec_preserved",
    "factorization",
    "transpose_duality",
    "row_reorder",
    "golden_worked_example",
    "golden_non_moon",
    "golden_staircase_graph",
)


@dataclass
class VerifyConfig:
    max_rows: int = 4
    max_len: int = 4
    max_ones: int = 4
    include_goldens: bool = True


@dataclass
class Report:
    passed: Counter = field(default_factory=Counter)
    failed: Counter = field(default_factory=Counter)
    witnesses: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, witness=None) -> None:
        if ok:
            self.passed[name] += 1
        else:
            self.failed[name] += 1
            self.witnesses.setdefault(name, witness)

    @property
    def ok(self) -> bool:
        return not self.failed

    def rows(self) -> list[tuple[str, int, int]]:
        names = [n for n in INVARIANTS if self.passed[n] or self.failed[n]]
        return [(n, self.passed[n], self.failed[n]) for n in names]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "invariants": {n: {"pass": p, "fail": f} for n, p, f in self.rows()},
            "witnesses": {k: repr(v) for k, v in self.witnesses.items()},
        }


def row_vectors(T: MoonPolyomino, max_ones: int) -> Iterator[tuple[int, ...]]:
    for m in itertools.product(*(range(min(r, max_ones) + 1) for r in T.lengths)):
        if sum(m) <= max_ones:
            yield m


def _row_injective_buckets(T: MoonPolyomino, max_ones: int) -> dict:
    """Fillings with at most one 1 per row, bucketed by (column counts, ER).

    Built by picking a column (or nothing) for each row directly, so it does
    not share code with the transpose-based enumerator it is checked against.
    """
    choices = [[None] + list(range(a, b + 1)) for a, b in T.rows]
    out: dict = {}
    for pick in itertools.product(*choices):
        ones = [(i, c) for i, c in enumerate(pick, start=1) if c is not None]
        if len(ones) > max_ones:
            continue
        counts = [0] * T.t
        for _, c in ones:
            counts[c - 1] += 1
        er = frozenset(i for i, c in enumerate(pick, start=1) if c is None)
        out.setdefault((tuple(counts), er), []).append(Filling01(T, frozenset(ones)))
    return out


def _check_filling(T: MoonPolyomino, m, F: Filling01, rep: Report) -> None:
    w = (T.rows, m, sorted(F.ones))
    stats = chain_stats(F)
    rep.record("oracle_agreement", stats_via_coloring(F) == stats, w)

    mask = coloring(F)
    rep.record("ones_are_free", not any(mask[c] is CellState.COLORED for c in F.ones), w)

    ec, _ = empty_lines(F)
    h = h_vector(T, m, ec)
    frees = [len(mask.free_in_row(i)) for i in range(1, T.s + 1)]
    rep.record("free_count", frees == [hi - mi for hi, mi in zip(h, m)], w)

    cs = to_compositions(F)
    rep.record("bijection_roundtrip", from_compositions(T, m, ec, cs) == F, w)
    rep.record("stats_from_gaps", stats_from_gaps(T, cs) == stats, w)

    G = phi(F)
    g_stats = chain_stats(G)
    rep.record("involution", phi(G) == F, w)
    rep.record("stat_swap", g_stats == stats[::-1], w)
    rep.record("ec_preserved", empty_lines(G)[0] == ec, w)
    rep.record("factorization", phi_via_g(F) == G, w)


def check_shape(T: MoonPolyomino, cfg: VerifyConfig, rep: Report) -> None:
    cols = range(1, T.t + 1)
    for m in row_vectors(T, cfg.max_ones):
        fills = list(enumerate_row_constrained(T, m))
        buckets: dict[frozenset, list[Filling01]] = {}
        for F in fills:
            _check_filling(T, m, F, rep)
            buckets.setdefault(empty_lines(F)[0], []).append(F)

        k = T.t - sum(m)
        if k < 0:
            continue
        total = BivarPoly()
        for A in map(frozenset, itertools.combinations(cols, k)):
            w = (T.rows, m, sorted(A))
            bucket = buckets.get(A, [])
            brute = distribution_of(bucket)
            closed = distribution_closed(T, m, A)
            total = total + closed
            rep.record("closed_eq_brute", closed == brute, (w, str(closed), str(brute)))
            rep.record("count_closed", count_closed(T, m, A) == len(bucket) == closed.evaluate(1, 1), w)
            rep.record("symmetry", brute.is_symmetric(), (w, str(brute)))
            images = {to_compositions(F) for F in bucket}
            space = set(composition_space(T, m, A))
            rep.record("bijection_count", images == space, w)
        rep.record("sum_over_A", total == distribution_of(fills), (T.rows, m))


def check_transpose_duality(T: MoonPolyomino, cfg: VerifyConfig, rep: Report) -> None:
    Tt = T.transpose()
    buckets = _row_injective_buckets(T, cfg.max_ones)
    rows = range(1, T.s + 1)
    for m in row_vectors(Tt, cfg.max_ones):
        k = T.s - sum(m)
        if k < 0:
            continue
        for A in map(frozenset, itertools.combinations(rows, k)):
            direct = distribution_of(buckets.get((m, A), []))
            closed = distribution_closed(Tt, m, A)
            ok = direct == closed and direct.is_symmetric()
            rep.record("transpose_duality", ok, (T.rows, m, sorted(A), str(direct), str(closed)))


def check_row_reorder(T: MoonPolyomino, rep: Report, cache: dict) -> None:
    def total(S):
        if S.rows not in cache:
            cache[S.rows] = distribution_of(enumerate_column_injective(S))
        return cache[S.rows]

    base = total(T)
    for perm in set(itertools.permutations(T.rows)):
        try:
            S = from_rows(perm)
        except ShapeError:
            continue
        rep.record("row_reorder", total(S) == base, (T.rows, perm))


def check_goldens(rep: Report) -> None:
    from .qpoly import P, Q

    T = from_rows([[3, 4], [1, 6], [1, 6], [2, 5], [2, 4]])
    m, A = (1, 2, 1, 0, 1), {2}
    want = P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3
    stats = sorted(chain_stats(F) for F in enumerate_row_constrained(T, m, A))
    ok = (stats == [(0, 3), (1, 2), (1, 2), (2, 1), (2, 1), (3, 0)]
          and distribution_closed(T, m, A) == want)
    rep.record("golden_worked_example", ok, stats)

    S = polyomino_from_rows([[2, 3], [1, 3], [1, 2]])
    got = distribution_of(enumerate_row_constrained(S, (1, 1, 1), set()))
    rep.record("golden_non_moon", got == P**2 + 2 * Q and not got.is_symmetric(), str(got))

    G = arcs.ArcGraph.of(11, [(1, 9), (2, 3), (2, 4), (3, 7), (5, 6), (6, 9), (6, 11), (9, 10)])
    pair = (arcs.cros2_nest2(G), chain_stats(arcs.graph_to_filling(G)))
    rep.record("golden_staircase_graph", pair == ((4, 6), (6, 4)), pair)


def run_battery(cfg: VerifyConfig) -> Report:
    rep = Report()
    cache: dict = {}
    for T in enumerate_shapes(cfg.max_rows, cfg.max_len):
        check_shape(T, cfg, rep)
        check_transpose_duality(T, cfg, rep)
        check_row_reorder(T, rep, cache)
    if cfg.include_goldens:
        check_goldens(rep)
    return rep


def staircase_extreme_counts(n: int) -> tuple[int, int]:
    """Arbitrary fillings of delta(n) with exactly C(n,4) SE chains, and with
    exactly C(n,4) NE chains."""
    d = arbitrary_distribution(delta(n))
    k = comb(n, 4)
    se = sum(c for (a, b), c in d.terms.items() if b == k)
    ne = sum(c for (a, b), c in d.terms.items() if a == k)
    return se, ne
