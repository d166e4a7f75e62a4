"""The involution that swaps ne2 and se2 while keeping the empty columns.

Each row's FREE-gap sequence is reversed and the filling is rebuilt row by
row in processing order. Reading the gaps off the full coloring of F is safe
because a row is only ever shaded by rows that come earlier in that order;
:func:`check_coloring_consistency` verifies this on the input.
"""

from __future__ import annotations

from .biject import build_rowwise, from_compositions, row_gaps, to_compositions
from .fill import Filling01, check_column_injective, coloring, empty_lines, shadow


def check_coloring_consistency(F: Filling01) -> None:
    """Raise AssertionError if some row's FREE cells differ between the partial
    coloring at its turn and the full coloring of F."""
    T = F.shape
    full = coloring(F)
    ec, _ = empty_lines(F)
    colored = {cell for cell in T.cells() if cell[1] in ec}
    for i in T.order:
        a, b = T.interval(i)
        partial = [c for c in range(a, b + 1) if (i, c) not in colored and (i, c) not in F.ones]
        if partial != full.free_in_row(i):
            raise AssertionError(
                f"row {i}: FREE cells {partial} at its turn, {full.free_in_row(i)} in the full coloring")
        for c in F.row_ones(i):
            colored.update(shadow(T, i, c))


def phi(F: Filling01, *, check: bool = __debug__) -> Filling01:
    check_column_injective(F)
    mask = coloring(F)
    if check:
        check_coloring_consistency(F)
    ec, _ = empty_lines(F)
    return build_rowwise(F.shape, ec, lambda i: row_gaps(mask, F, i)[::-1])


def phi_via_g(F: Filling01) -> Filling01:
    """Same map, computed as g(rev(f(F)))."""
    cs = to_compositions(F)
    ec, _ = empty_lines(F)
    return from_compositions(F.shape, F.row_counts(), ec, cs.reversed())
