"""Moon polyominoes stored as a top-down list of inclusive column intervals.

Rows and columns are 1-based. A shape is normalized so its leftmost used
column is 1, which makes equality of shapes a plain tuple comparison.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence


class ShapeError(ValueError):
    pass


class EmptyRow(ShapeError):
    pass


class NotIntersectionFree(ShapeError):
    pass


class NotColumnConvex(ShapeError):
    pass


Interval = tuple[int, int]
Cell = tuple[int, int]


def _contains(outer: Interval, inner: Interval) -> bool:
    return outer[0] <= inner[0] and inner[1] <= outer[1]


@dataclass(frozen=True)
class RectRegion:
    row_lo: int
    row_hi: int
    col_lo: int
    col_hi: int

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return self.row_lo <= r <= self.row_hi and self.col_lo <= c <= self.col_hi

    def cells(self) -> Iterator[Cell]:
        for r in range(self.row_lo, self.row_hi + 1):
            for c in range(self.col_lo, self.col_hi + 1):
                yield (r, c)


@dataclass(frozen=True)
class Polyomino:
    """Row-convex cell arrangement; no nestedness or column checks.

    Chain statistics and brute-force enumeration only need this much, which
    is what lets them run on shapes that are not moon polyominoes.
    """

    rows: tuple[Interval, ...]

    @property
    def s(self) -> int:
        return len(self.rows)

    @cached_property
    def t(self) -> int:
        return max(b for _, b in self.rows)

    @cached_property
    def lengths(self) -> tuple[int, ...]:
        return tuple(b - a + 1 for a, b in self.rows)

    @cached_property
    def n_cells(self) -> int:
        return sum(self.lengths)

    def interval(self, i: int) -> Interval:
        return self.rows[i - 1]

    def contains(self, cell: Cell) -> bool:
        r, c = cell
        if not 1 <= r <= len(self.rows):
            return False
        a, b = self.rows[r - 1]
        return a <= c <= b

    __contains__ = contains

    def cells(self) -> Iterator[Cell]:
        for i, (a, b) in enumerate(self.rows, start=1):
            for c in range(a, b + 1):
                yield (i, c)

    def rows_meeting_column(self, c: int) -> list[int]:
        return [i for i, (a, b) in enumerate(self.rows, start=1) if a <= c <= b]

    def rect_inside(self, r1: int, r2: int, c1: int, c2: int) -> bool:
        """Whether the axis-aligned box spanned by two cells lies in the shape."""
        lo_r, hi_r = min(r1, r2), max(r1, r2)
        lo_c, hi_c = min(c1, c2), max(c1, c2)
        for r in range(lo_r, hi_r + 1):
            a, b = self.rows[r - 1]
            if a > lo_c or b < hi_c:
                return False
        return True

    def to_json(self) -> dict:
        return {"rows": [list(iv) for iv in self.rows]}


def _normalize(intervals: Sequence[Sequence[int]]) -> tuple[Interval, ...]:
    if not intervals:
        raise ShapeError("a shape needs at least one row")
    rows = []
    for i, iv in enumerate(intervals, start=1):
        a, b = int(iv[0]), int(iv[1])
        if a > b:
            raise EmptyRow(f"row {i} has empty interval [{a},{b}]")
        rows.append((a, b))
    shift = min(a for a, _ in rows) - 1
    return tuple((a - shift, b - shift) for a, b in rows)


def polyomino_from_rows(intervals: Sequence[Sequence[int]]) -> Polyomino:
    """Normalize without validating nestedness or column-convexity."""
    return Polyomino(_normalize(intervals))


def _validate(rows: tuple[Interval, ...]) -> None:
    for (i, u), (j, v) in itertools.combinations(enumerate(rows, start=1), 2):
        if not (_contains(u, v) or _contains(v, u)):
            raise NotIntersectionFree(f"rows {i} {list(u)} and {j} {list(v)} are not nested")
    t = max(b for _, b in rows)
    for c in range(1, t + 1):
        hit = [i for i, (a, b) in enumerate(rows, start=1) if a <= c <= b]
        if hit and hit[-1] - hit[0] + 1 != len(hit):
            raise NotColumnConvex(f"column {c} meets rows {hit}, which is not contiguous")


@dataclass(frozen=True)
class MoonPolyomino(Polyomino):
    """A convex, intersection-free polyomino.

    Build through :func:`from_rows`, which normalizes and validates. The
    peak index ``i0`` splits the rows into ``up`` (rows ``1..i0``) and ``low``;
    when every row has the same length all rows are in ``up``.
    """

    rows: tuple[Interval, ...]
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        if not self._checked:
            _validate(self.rows)
        r, i0 = self.lengths, self.i0
        if any(r[k] < r[k + 1] for k in range(i0, len(r) - 1)):
            raise AssertionError(f"row lengths {r} of a validated shape are not unimodal")

    @cached_property
    def i0(self) -> int:
        r = self.lengths
        i0 = 1
        while i0 < len(r) and r[i0 - 1] <= r[i0]:
            i0 += 1
        return i0

    def in_up(self, i: int) -> bool:
        return i <= self.i0

    @property
    def up(self) -> frozenset[int]:
        return frozenset(range(1, self.i0 + 1))

    @property
    def low(self) -> frozenset[int]:
        return frozenset(range(self.i0 + 1, self.s + 1))

    @cached_property
    def order(self) -> tuple[int, ...]:
        """Row indices sorted by the processing order used by the colorings.

        Shorter rows first; on ties upper rows precede lower ones, upper rows
        go top-down and lower rows go bottom-up.
        """
        r = self.lengths

        def key(i):
            if self.in_up(i):
                return (r[i - 1], 0, i)
            return (r[i - 1], 1, -i)

        return tuple(sorted(range(1, self.s + 1), key=key))

    @cached_property
    def rank(self) -> dict[int, int]:
        """Position of each row in :attr:`order`, 0-based."""
        return {i: k for k, i in enumerate(self.order)}

    @cached_property
    def _rects(self) -> tuple[RectRegion, ...]:
        out = []
        for i in range(1, self.s + 1):
            iv = self.rows[i - 1]
            lo = hi = i
            if self.in_up(i):
                while hi < self.s and _contains(self.rows[hi], iv):
                    hi += 1
            else:
                while lo > 1 and _contains(self.rows[lo - 2], iv):
                    lo -= 1
            out.append(RectRegion(lo, hi, iv[0], iv[1]))
        return tuple(out)

    def rectangle(self, i: int) -> RectRegion:
        if not 1 <= i <= self.s:
            raise IndexError(f"row {i} out of range 1..{self.s}")
        return self._rects[i - 1]

    def transpose(self) -> MoonPolyomino:
        new_rows = []
        for c in range(1, self.t + 1):
            hit = self.rows_meeting_column(c)
            new_rows.append((hit[0], hit[-1]))
        return from_rows(new_rows)


def from_rows(intervals: Sequence[Sequence[int]]) -> MoonPolyomino:
    return MoonPolyomino(_normalize(intervals))


def row_order(T: MoonPolyomino) -> list[int]:
    return list(T.order)


def rectangle(T: MoonPolyomino, i: int) -> RectRegion:
    return T.rectangle(i)


def transpose(T: MoonPolyomino) -> MoonPolyomino:
    return T.transpose()


def delta(n: int) -> MoonPolyomino:
    """Staircase whose row i covers column labels ``i+1..n``.

    After normalization the column label j sits at column ``j - 1``.
    """
    if n < 2:
        raise ShapeError("delta(n) needs n >= 2")
    return from_rows([(i + 1, n) for i in range(1, n)])


def rect_shape(rows: int, cols: int) -> MoonPolyomino:
    return from_rows([(1, cols)] * rows)


def enumerate_shapes(max_rows: int, max_len: int) -> Iterator[MoonPolyomino]:
    """Every moon polyomino with at most ``max_rows`` rows and ``max_len`` columns.

    Ordered by row count, then lexicographically on the interval list.
    """
    ivs = [(a, b) for a in range(1, max_len + 1) for b in range(a, max_len + 1)]
    for s in range(1, max_rows + 1):
        for combo in itertools.product(ivs, repeat=s):
            if min(a for a, _ in combo) != 1:
                continue
            try:
                _validate(combo)
            except ShapeError:
                continue
            yield MoonPolyomino(tuple(combo), _checked=True)


def shape_from_json(obj: dict, *, validate: bool = True) -> Polyomino:
    rows = obj["rows"]
    return from_rows(rows) if validate else polyomino_from_rows(rows)


def enumerate_shapes_by_cells(max_rows: int, max_cells: int) -> Iterator[MoonPolyomino]:
    """Moon polyominoes with at most ``max_rows`` rows and ``max_cells`` cells.

    Same ordering as :func:`enumerate_shapes`; rows are grown one at a time
    and pruned on nestedness and cell count.
    """
    width = max_cells

    def grow(prefix: list[Interval], depth: int, cells: int):
        if len(prefix) == depth:
            rows = tuple(prefix)
            if min(a for a, _ in rows) != 1:
                return
            try:
                _validate(rows)
            except ShapeError:
                return
            yield MoonPolyomino(rows, _checked=True)
            return
        budget = max_cells - cells - (depth - len(prefix) - 1)
        for a in range(1, width + 1):
            for b in range(a, min(width, a + budget - 1) + 1):
                iv = (a, b)
                if all(_contains(iv, u) or _contains(u, iv) for u in prefix):
                    prefix.append(iv)
                    yield from grow(prefix, depth, cells + b - a + 1)
                    prefix.pop()

    for s in range(1, max_rows + 1):
        yield from grow([], s, 0)
