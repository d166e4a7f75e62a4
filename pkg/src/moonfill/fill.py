"""01-fillings, their NE/SE chain statistics, and the row-by-row coloring.

Rows are numbered top-down. An NE chain is a pair of 1s where the upper one
is strictly to the right of the lower one; an SE chain has the upper one
strictly to the left. Either way the bounding box of the two cells has to
lie inside the shape.
"""

from __future__ import annotations

import enum
import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .qpoly import BivarPoly
from .shape import Cell, MoonPolyomino, Polyomino, shape_from_json

DEFAULT_CELL_CAP = 25

# Test hook: swaps the NE and SE patterns so the verification battery can be
# shown to catch orientation bugs. Never set outside tests.
_FLIP_ORIENTATION = False


class FillingError(ValueError):
    pass


class ColumnConflict(FillingError):
    pass


class CapExceeded(FillingError):
    pass


@dataclass(frozen=True)
class Filling01:
    shape: Polyomino
    ones: frozenset[Cell]

    def __post_init__(self):
        ones = frozenset((int(r), int(c)) for r, c in self.ones)
        object.__setattr__(self, "ones", ones)
        bad = [cell for cell in ones if cell not in self.shape]
        if bad:
            raise FillingError(f"cells {sorted(bad)} lie outside the shape")

    @classmethod
    def of(cls, shape: Polyomino, ones: Iterable[Cell]) -> Filling01:
        return cls(shape, frozenset(ones))

    def row_ones(self, i: int) -> list[int]:
        return sorted(c for r, c in self.ones if r == i)

    def row_counts(self) -> tuple[int, ...]:
        return tuple(len(self.row_ones(i)) for i in range(1, self.shape.s + 1))

    def col_counts(self) -> tuple[int, ...]:
        counts = [0] * self.shape.t
        for _, c in self.ones:
            counts[c - 1] += 1
        return tuple(counts)

    def transpose(self) -> Filling01:
        return Filling01(self.shape.transpose(), frozenset((c, r) for r, c in self.ones))

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "ones": [list(c) for c in sorted(self.ones)]}

    @classmethod
    def from_json(cls, obj: dict, *, validate: bool = True) -> Filling01:
        shape = shape_from_json(obj["shape"], validate=validate)
        return cls(shape, frozenset(tuple(c) for c in obj["ones"]))


def _pair_kind(shape: Polyomino, a: Cell, b: Cell) -> str | None:
    """'ne', 'se' or None for an unordered pair of cells."""
    (r1, c1), (r2, c2) = sorted((a, b))
    if r1 == r2 or c1 == c2:
        return None
    if not shape.rect_inside(r1, r2, c1, c2):
        return None
    kind = "ne" if c1 > c2 else "se"
    if _FLIP_ORIENTATION:
        kind = "se" if kind == "ne" else "ne"
    return kind


def chain_stats(F: Filling01) -> tuple[int, int]:
    ne = se = 0
    for a, b in itertools.combinations(F.ones, 2):
        kind = _pair_kind(F.shape, a, b)
        if kind == "ne":
            ne += 1
        elif kind == "se":
            se += 1
    return ne, se


def empty_lines(F: Filling01) -> tuple[frozenset[int], frozenset[int]]:
    cols = {c for _, c in F.ones}
    rows = {r for r, _ in F.ones}
    T = F.shape
    ec = frozenset(c for c in range(1, T.t + 1) if c not in cols)
    er = frozenset(i for i in range(1, T.s + 1) if i not in rows)
    return ec, er


class CellState(enum.Enum):
    FREE = "free"
    ONE = "one"
    COLORED = "colored"


@dataclass(frozen=True)
class ColorMask:
    shape: MoonPolyomino
    state: dict

    def __getitem__(self, cell: Cell) -> CellState:
        return self.state[cell]

    def cells_in(self, st: CellState) -> frozenset[Cell]:
        return frozenset(c for c, v in self.state.items() if v is st)

    def free_in_row(self, i: int) -> list[int]:
        a, b = self.shape.interval(i)
        return [c for c in range(a, b + 1) if self.state[(i, c)] is CellState.FREE]


def shadow(T: MoonPolyomino, i: int, c: int) -> list[Cell]:
    """Cells colored by a 1 at ``(i, c)``.

    Below it for upper rows, above it for lower rows, inside the row's
    rectangle, and only in rows that come after row i in ``T.order``. The
    last clause matters when an upper and a lower row share an interval:
    both rectangles then span both rows, and shading the earlier row would
    hide chains from the gap counts.
    """
    rect = T.rectangle(i)
    if T.in_up(i):
        rows = range(i + 1, rect.row_hi + 1)
    else:
        rows = range(rect.row_lo, i)
    rank = T.rank
    return [(r, c) for r in rows if rank[r] > rank[i]]


def check_column_injective(F: Filling01) -> None:
    seen: dict[int, int] = {}
    for r, c in sorted(F.ones):
        if c in seen:
            raise ColumnConflict(f"column {c} holds 1s in rows {seen[c]} and {r}")
        seen[c] = r


def coloring(F: Filling01) -> ColorMask:
    T = F.shape
    if not isinstance(T, MoonPolyomino):
        raise TypeError("coloring is only defined on moon polyominoes")
    check_column_injective(F)
    ec, _ = empty_lines(F)
    colored = {cell for cell in T.cells() if cell[1] in ec}
    for i, c in F.ones:
        colored.update(shadow(T, i, c))
    state = {}
    for cell in T.cells():
        if cell in F.ones:
            state[cell] = CellState.ONE
        elif cell in colored:
            state[cell] = CellState.COLORED
        else:
            state[cell] = CellState.FREE
    return ColorMask(T, state)


def _luc_ruc(mask: ColorMask, cell: Cell) -> tuple[int, int]:
    if mask[cell] is not CellState.ONE:
        return 0, 0
    i, c = cell
    free = mask.free_in_row(i)
    left = sum(1 for x in free if x < c)
    return left, len(free) - left


def luc_ruc(F: Filling01, cell: Cell, mask: ColorMask | None = None) -> tuple[int, int]:
    if cell not in F.shape:
        raise FillingError(f"cell {cell} lies outside the shape")
    return _luc_ruc(mask or coloring(F), cell)


def stats_via_coloring(F: Filling01) -> tuple[int, int]:
    mask = coloring(F)
    T = F.shape
    ne = se = 0
    for cell in F.ones:
        luc, ruc = _luc_ruc(mask, cell)
        if T.in_up(cell[0]):
            ne, se = ne + luc, se + ruc
        else:
            ne, se = ne + ruc, se + luc
    return ne, se


def enumerate_row_constrained(T: Polyomino, m: Sequence[int],
                              A: Iterable[int] | None = None) -> Iterator[Filling01]:
    """Fillings with ``m[i-1]`` 1s in row i and at most one 1 per column.

    With ``A`` given, keep only those whose empty-column set is exactly A.
    Rows are filled top-down; within a row column choices are lexicographic.
    """
    m = tuple(m)
    if len(m) != T.s:
        raise ValueError(f"need {T.s} row counts, got {len(m)}")
    if any(x < 0 for x in m):
        raise ValueError("row counts must be nonnegative")
    banned = frozenset(A) if A is not None else frozenset()
    if A is not None:
        need = frozenset(range(1, T.t + 1)) - banned
        if len(need) != sum(m):
            return

    def rec(i: int, used: frozenset[int], acc: list[Cell]):
        if i > T.s:
            if A is None or used == need:
                yield Filling01(T, frozenset(acc))
            return
        a, b = T.interval(i)
        avail = [c for c in range(a, b + 1) if c not in used and c not in banned]
        for cols in itertools.combinations(avail, m[i - 1]):
            yield from rec(i + 1, used | set(cols), acc + [(i, c) for c in cols])

    yield from rec(1, frozenset(), [])


def enumerate_column_constrained(T: MoonPolyomino, m: Sequence[int],
                                 A: Iterable[int] | None = None) -> Iterator[Filling01]:
    """Column counts ``m`` with at most one 1 per row (empty rows exactly A)."""
    for F in enumerate_row_constrained(T.transpose(), m, A):
        yield F.transpose()


def enumerate_column_injective(T: Polyomino) -> Iterator[Filling01]:
    """All fillings with at most one 1 per column, any row counts."""
    choices = [[None] + T.rows_meeting_column(c) for c in range(1, T.t + 1)]
    for pick in itertools.product(*choices):
        yield Filling01(T, frozenset((r, c) for c, r in enumerate(pick, start=1) if r is not None))


def cell_cap() -> int:
    return int(os.environ.get("MOONFILL_CELL_CAP", DEFAULT_CELL_CAP))


def enumerate_arbitrary(T: Polyomino, cap: int | None = None) -> Iterator[Filling01]:
    cap = cell_cap() if cap is None else cap
    if T.n_cells > cap:
        raise CapExceeded(f"{T.n_cells} cells exceeds the cap of {cap}")
    cells = list(T.cells())
    for mask in range(1 << len(cells)):
        yield Filling01(T, frozenset(c for k, c in enumerate(cells) if mask >> k & 1))


def arbitrary_distribution(T: Polyomino, cap: int | None = None) -> BivarPoly:
    """Distribution over all 2^cells fillings, vectorized over bitmasks.

    Pairs are classified once with the same rule as :func:`chain_stats`;
    the per-mask work is then a popcount over the NE and SE pair lists.
    """
    cap = cell_cap() if cap is None else cap
    if T.n_cells > cap:
        raise CapExceeded(f"{T.n_cells} cells exceeds the cap of {cap}")
    cells = list(T.cells())
    ne_pairs, se_pairs = [], []
    for (x, a), (y, b) in itertools.combinations(enumerate(cells), 2):
        kind = _pair_kind(T, a, b)
        if kind == "ne":
            ne_pairs.append((x, y))
        elif kind == "se":
            se_pairs.append((x, y))
    n = len(cells)
    total = 1 << n
    chunk = 1 << min(n, 16)
    acc: dict[tuple[int, int], int] = {}
    for start in range(0, total, chunk):
        masks = np.arange(start, min(start + chunk, total), dtype=np.int64)
        bits = ((masks[:, None] >> np.arange(n, dtype=np.int64)) & 1).astype(np.int32)
        ne = np.zeros(len(masks), dtype=np.int64)
        se = np.zeros(len(masks), dtype=np.int64)
        for x, y in ne_pairs:
            ne += bits[:, x] & bits[:, y]
        for x, y in se_pairs:
            se += bits[:, x] & bits[:, y]
        keys, counts = np.unique(np.stack([ne, se], axis=1), axis=0, return_counts=True)
        for (a, b), k in zip(keys.tolist(), counts.tolist()):
            acc[(a, b)] = acc.get((a, b), 0) + k
    return BivarPoly(acc)


def distribution_of(fillings: Iterable[Filling01]) -> BivarPoly:
    return BivarPoly.from_pairs(chain_stats(F) for F in fillings)


def distribution_brute(T: Polyomino, m: Sequence[int] | None = None,
                       A: Iterable[int] | None = None, mode: str = "row") -> BivarPoly:
    """Sum of p^ne2 q^se2 over the selected filling set, by enumeration."""
    if mode == "row":
        return distribution_of(enumerate_row_constrained(T, m, A))
    if mode == "column":
        return distribution_of(enumerate_column_constrained(T, m, A))
    if mode == "arbitrary":
        return arbitrary_distribution(T)
    raise ValueError(f"unknown mode {mode!r}")


def distributions_by_empty_columns(T: Polyomino, m: Sequence[int]) -> dict[frozenset[int], BivarPoly]:
    """One pass over N(T, m), bucketed by the empty-column set."""
    buckets: dict[frozenset[int], list[tuple[int, int]]] = {}
    for F in enumerate_row_constrained(T, m):
        ec, _ = empty_lines(F)
        buckets.setdefault(ec, []).append(chain_stats(F))
    return {k: BivarPoly.from_pairs(v) for k, v in buckets.items()}
