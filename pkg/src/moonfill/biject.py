"""Row capacities, the filling <-> composition bijection, and the closed form.

A filling with at most one 1 per column is encoded row by row as the sizes
of the FREE gaps around its 1s. For row i the gaps form a composition of
``h_i - m_i`` into ``m_i + 1`` nonnegative parts.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from operator import mul
from typing import Iterable, Iterator, Sequence

from .fill import (
    ColorMask,
    Filling01,
    FillingError,
    coloring,
    empty_lines,
    shadow,
)
from .qpoly import ONE, BivarPoly, binomial, pq_gaussian
from .shape import Cell, MoonPolyomino


class InfeasibleComposition(FillingError):
    pass


class InfeasibleEmptySet(ValueError):
    pass


@dataclass(frozen=True)
class CompositionSeq:
    """Per-row gap compositions, ``comps[i-1]`` belonging to row i."""

    comps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "comps", tuple(tuple(int(x) for x in c) for c in self.comps))
        if any(x < 0 for c in self.comps for x in c):
            raise ValueError("composition parts must be nonnegative")

    def reversed(self) -> CompositionSeq:
        return CompositionSeq(tuple(c[::-1] for c in self.comps))

    def to_json(self) -> dict:
        return {"comps": [list(c) for c in self.comps]}

    @classmethod
    def from_json(cls, obj: dict) -> CompositionSeq:
        return cls(tuple(tuple(c) for c in obj["comps"]))


def h_vector(T: MoonPolyomino, m: Sequence[int], A: Iterable[int]) -> list[int]:
    """Capacity of each row once earlier rows and the empty columns are removed.

    Walking rows in processing order, row i loses one cell per 1 placed in an
    earlier row and one per column of A that meets it. Entries may be
    negative; the matching Gaussian factor is then zero.
    """
    if len(m) != T.s:
        raise ValueError(f"need {T.s} row counts, got {len(m)}")
    A = frozenset(A)
    h = [0] * T.s
    placed = 0
    for i in T.order:
        a, b = T.interval(i)
        hits = sum(1 for k in A if a <= k <= b)
        h[i - 1] = T.lengths[i - 1] - placed - hits
        placed += m[i - 1]
    return h


def _check_feasible(T: MoonPolyomino, m: Sequence[int], A: frozenset[int]) -> None:
    if not A <= frozenset(range(1, T.t + 1)):
        raise InfeasibleEmptySet(f"empty-column set {sorted(A)} is not inside 1..{T.t}")
    if len(A) != T.t - sum(m):
        raise InfeasibleEmptySet(
            f"|A| = {len(A)} but t - sum(m) = {T.t - sum(m)}; no filling can have these empty columns")


def distribution_closed(T: MoonPolyomino, m: Sequence[int], A: Iterable[int]) -> BivarPoly:
    A = frozenset(A)
    _check_feasible(T, m, A)
    h = h_vector(T, m, A)
    out = ONE
    for hj, mj in zip(h, m):
        out = out * pq_gaussian(hj, mj)
    return out


def count_closed(T: MoonPolyomino, m: Sequence[int], A: Iterable[int]) -> int:
    A = frozenset(A)
    _check_feasible(T, m, A)
    h = h_vector(T, m, A)
    return reduce(mul, (binomial(hj, mj) for hj, mj in zip(h, m)), 1)


def _gaps(free: list[int], ones: list[int]) -> tuple[int, ...]:
    gaps = [0] * (len(ones) + 1)
    for c in free:
        gaps[sum(1 for x in ones if x < c)] += 1
    return tuple(gaps)


def row_gaps(mask: ColorMask, F: Filling01, i: int) -> tuple[int, ...]:
    return _gaps(mask.free_in_row(i), F.row_ones(i))


def to_compositions(F: Filling01) -> CompositionSeq:
    """The map f: FREE-gap sizes of every row under the coloring of F."""
    mask = coloring(F)
    return CompositionSeq(tuple(row_gaps(mask, F, i) for i in range(1, F.shape.s + 1)))


def place_row(uncolored: list[int], gaps: Sequence[int]) -> list[int]:
    """Columns for the 1s so the uncolored cells split into ``gaps``.

    ``uncolored`` lists the row's currently uncolored columns left to right;
    it must have exactly ``sum(gaps) + len(gaps) - 1`` entries.
    """
    k = len(gaps) - 1
    if len(uncolored) != sum(gaps) + k:
        raise InfeasibleComposition(
            f"gaps {tuple(gaps)} need {sum(gaps) + k} uncolored cells, row has {len(uncolored)}")
    cols, pos = [], 0
    for g in gaps[:-1]:
        pos += g
        cols.append(uncolored[pos])
        pos += 1
    return cols


def build_rowwise(T: MoonPolyomino, A: Iterable[int], row_gap_for) -> Filling01:
    """Shared driver of g and of the involution.

    Colors the columns of A, then visits rows in processing order; for each
    row ``row_gap_for(i)`` supplies its gap composition, the 1s are placed
    among the uncolored cells and their shadows are colored.
    """
    A = frozenset(A)
    colored = {cell for cell in T.cells() if cell[1] in A}
    ones: set[Cell] = set()
    for i in T.order:
        gaps = row_gap_for(i)
        a, b = T.interval(i)
        uncolored = [c for c in range(a, b + 1) if (i, c) not in colored]
        for c in place_row(uncolored, gaps):
            ones.add((i, c))
            colored.update(shadow(T, i, c))
    return Filling01(T, frozenset(ones))


def from_compositions(T: MoonPolyomino, m: Sequence[int], A: Iterable[int],
                      cs: CompositionSeq) -> Filling01:
    """The map g, inverse of :func:`to_compositions` on N(T, m; A)."""
    A = frozenset(A)
    if len(A) != T.t - sum(m):
        raise InfeasibleComposition(f"|A| = {len(A)} does not equal t - sum(m) = {T.t - sum(m)}")
    if len(cs.comps) != T.s:
        raise InfeasibleComposition(f"need {T.s} compositions, got {len(cs.comps)}")
    for i, (c, mi) in enumerate(zip(cs.comps, m), start=1):
        if len(c) != mi + 1:
            raise InfeasibleComposition(f"row {i}: composition {c} has {len(c)} parts, expected {mi + 1}")
    F = build_rowwise(T, A, lambda i: cs.comps[i - 1])
    if empty_lines(F)[0] != A:
        raise InfeasibleComposition("placement left a column outside A empty")
    return F


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` parts, in lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 0:
            yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def composition_space(T: MoonPolyomino, m: Sequence[int], A: Iterable[int]) -> Iterator[CompositionSeq]:
    """Product of weak compositions of ``h_i - m_i`` into ``m_i + 1`` parts."""
    h = h_vector(T, m, A)
    if any(hi < mi for hi, mi in zip(h, m)):
        return
    per_row = [list(compositions(hi - mi, mi + 1)) for hi, mi in zip(h, m)]

    def rec(k, acc):
        if k == len(per_row):
            yield CompositionSeq(tuple(acc))
            return
        for c in per_row[k]:
            yield from rec(k + 1, acc + [c])

    yield from rec(0, [])


def stats_from_gaps(T: MoonPolyomino, cs: CompositionSeq) -> tuple[int, int]:
    """(ne2, se2) from left/right partial sums of every composition."""
    ne = se = 0
    for i, c in enumerate(cs.comps, start=1):
        total = sum(c)
        run = 0
        for j in range(len(c) - 1):
            run += c[j]
            luc, ruc = run, total - run
            if T.in_up(i):
                ne, se = ne + luc, se + ruc
            else:
                ne, se = ne + ruc, se + luc
    return ne, se


def gap_distribution(T: MoonPolyomino, m: Sequence[int], A: Iterable[int]) -> BivarPoly:
    """Distribution computed from the composition side of the bijection."""
    return BivarPoly.from_pairs(stats_from_gaps(T, cs) for cs in composition_space(T, m, A))
