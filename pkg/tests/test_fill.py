import itertools

import pytest
from hypothesis import given, settings, strategies as st

from moonfill import fill
from moonfill.fill import (
    CapExceeded,
    CellState,
    ColumnConflict,
    Filling01,
    arbitrary_distribution,
    chain_stats,
    coloring,
    distribution_brute,
    distribution_of,
    empty_lines,
    enumerate_arbitrary,
    enumerate_column_constrained,
    enumerate_column_injective,
    enumerate_row_constrained,
    luc_ruc,
    stats_via_coloring,
)
from moonfill.qpoly import ONE, P, Q
from moonfill.shape import delta, enumerate_shapes, from_rows, rect_shape

SMALL = list(enumerate_shapes(3, 3))


def naive_stats(F):
    """Chains straight from the definition, checking every box cell."""
    cells = set(F.shape.cells())
    ne = se = 0
    for (r1, c1), (r2, c2) in itertools.permutations(F.ones, 2):
        if not (r1 < r2):
            continue
        box = {(r, c) for r in range(r1, r2 + 1) for c in range(min(c1, c2), max(c1, c2) + 1)}
        if not box <= cells:
            continue
        if c1 > c2:
            ne += 1
        elif c1 < c2:
            se += 1
    return ne, se


def test_chain_stats_examples(non_moon):
    T = rect_shape(3, 3)
    assert chain_stats(Filling01.of(T, [(2, 2)])) == (0, 0)
    assert chain_stats(Filling01.of(non_moon, [(1, 3), (2, 2), (3, 1)])) == (2, 0)
    # same row or column pairs are never chains
    assert chain_stats(Filling01.of(T, [(1, 1), (1, 3), (2, 2)])) == (1, 1)
    assert chain_stats(Filling01.of(T, [(1, 1), (3, 1)])) == (0, 0)


@st.composite
def fillings(draw):
    T = draw(st.sampled_from(SMALL + [delta(5), from_rows([[3, 4], [1, 6], [1, 6], [2, 5], [2, 4]])]))
    cells = sorted(T.cells())
    ones = draw(st.sets(st.sampled_from(cells)))
    return Filling01(T, frozenset(ones))


@given(fillings())
@settings(max_examples=300)
def test_chain_stats_matches_definition(F):
    assert chain_stats(F) == naive_stats(F)


def test_empty_lines(square):
    assert empty_lines(Filling01.of(square, [])) == ({1, 2}, {1, 2})
    assert empty_lines(Filling01.of(square, [(1, 1), (2, 2)])) == (set(), set())
    T = from_rows([[1, 3], [1, 3]])
    assert empty_lines(Filling01.of(T, [(1, 2)])) == ({1, 3}, {2})


def test_filling_rejects_outside_cells(square):
    with pytest.raises(fill.FillingError):
        Filling01.of(square, [(1, 3)])


def test_coloring_examples(square):
    mask = coloring(Filling01.of(square, [(1, 1), (2, 2)]))
    assert mask.cells_in(CellState.COLORED) == {(2, 1)}
    assert mask.cells_in(CellState.ONE) == {(1, 1), (2, 2)}
    assert mask.cells_in(CellState.FREE) == {(1, 2)}

    T = from_rows([[1, 2], [1, 3]])
    mask = coloring(Filling01.of(T, [(1, 1), (2, 2)]))
    assert mask.cells_in(CellState.COLORED) == {(2, 1), (2, 3)}

    W = from_rows([[3, 4], [1, 6], [1, 6], [2, 5], [2, 4]])
    mask = coloring(Filling01.of(W, []))
    assert mask.cells_in(CellState.COLORED) == set(W.cells())


def test_coloring_does_not_shade_earlier_rows():
    # rows 1 (upper) and 3 (lower) share the interval [1,1]; row 1 is first
    T = from_rows([[1, 1], [1, 2], [1, 1]])
    assert T.order == (1, 3, 2)
    mask = coloring(Filling01.of(T, [(3, 1)]))
    assert mask[(1, 1)] is CellState.FREE
    assert mask[(2, 1)] is CellState.COLORED


def test_coloring_rejects_column_conflict(square):
    with pytest.raises(ColumnConflict):
        coloring(Filling01.of(square, [(1, 1), (2, 1)]))
    with pytest.raises(ColumnConflict):
        stats_via_coloring(Filling01.of(square, [(1, 1), (2, 1)]))


def test_luc_ruc(square):
    F = Filling01.of(square, [(1, 1), (2, 2)])
    assert luc_ruc(F, (1, 1)) == (0, 1)
    assert luc_ruc(F, (2, 2)) == (0, 0)
    assert luc_ruc(F, (1, 2)) == (0, 0)
    with pytest.raises(fill.FillingError):
        luc_ruc(F, (3, 1))


def test_stats_via_coloring_examples(square):
    assert stats_via_coloring(Filling01.of(square, [(1, 2), (2, 1)])) == (1, 0)
    assert stats_via_coloring(Filling01.of(square, [(1, 1), (2, 2)])) == (0, 1)


def test_stats_via_coloring_agrees_on_small_family():
    n = 0
    for T in SMALL:
        for F in enumerate_column_injective(T):
            assert stats_via_coloring(F) == chain_stats(F)
            n += 1
    assert n > 1000


def test_worked_enumeration(worked):
    fs = list(enumerate_row_constrained(worked, (1, 2, 1, 0, 1), {2}))
    assert len(fs) == len(set(fs)) == 6
    assert sorted(chain_stats(F) for F in fs) == [(0, 3), (1, 2), (1, 2), (2, 1), (2, 1), (3, 0)]
    assert all(empty_lines(F)[0] == {2} for F in fs)


def test_row_constrained_examples(square, worked):
    fs = list(enumerate_row_constrained(square, (1, 1), set()))
    assert {F.ones for F in fs} == {frozenset({(1, 1), (2, 2)}), frozenset({(1, 2), (2, 1)})}
    assert len(list(enumerate_row_constrained(worked, (0,) * 5, range(1, 7)))) == 1
    assert list(enumerate_row_constrained(square, (3, 0))) == []
    with pytest.raises(ValueError):
        list(enumerate_row_constrained(square, (1,)))


def test_row_constrained_matches_filtered_arbitrary():
    for T in SMALL:
        for m in itertools.product(*(range(r + 1) for r in T.lengths)):
            want = {F.ones for F in enumerate_arbitrary(T)
                    if F.row_counts() == m and all(k <= 1 for k in F.col_counts())}
            got = [F.ones for F in enumerate_row_constrained(T, m)]
            assert len(got) == len(set(got))
            assert set(got) == want


def test_row_constrained_order_is_deterministic(worked):
    a = [F.ones for F in enumerate_row_constrained(worked, (1, 2, 1, 0, 1))]
    b = [F.ones for F in enumerate_row_constrained(worked, (1, 2, 1, 0, 1))]
    assert a == b


def test_column_constrained_matches_definition():
    for T in SMALL:
        for m in itertools.product(*(range(2) for _ in range(T.t))):
            want = {F.ones for F in enumerate_arbitrary(T)
                    if F.col_counts() == m and all(k <= 1 for k in F.row_counts())}
            assert {F.ones for F in enumerate_column_constrained(T, m)} == want


def test_arbitrary_counts(square):
    assert len(list(enumerate_arbitrary(delta(2)))) == 2
    assert len(list(enumerate_arbitrary(delta(5)))) == 1024
    assert len(list(enumerate_arbitrary(square))) == 16


def test_cell_cap(monkeypatch):
    with pytest.raises(CapExceeded):
        list(enumerate_arbitrary(rect_shape(2, 2), cap=3))
    with pytest.raises(CapExceeded):
        arbitrary_distribution(rect_shape(6, 5))
    monkeypatch.setenv("MOONFILL_CELL_CAP", "3")
    with pytest.raises(CapExceeded):
        arbitrary_distribution(rect_shape(2, 2))


@pytest.mark.parametrize("T", SMALL[::5] + [delta(4), delta(5), rect_shape(3, 3)])
def test_vectorized_arbitrary_matches_per_filling(T):
    assert arbitrary_distribution(T) == distribution_of(enumerate_arbitrary(T))


def test_distribution_brute_examples(worked, non_moon):
    want = P**3 + 2 * P**2 * Q + 2 * P * Q**2 + Q**3
    assert distribution_brute(worked, (1, 2, 1, 0, 1), {2}) == want
    assert distribution_brute(non_moon, (1, 1, 1), set()) == P**2 + 2 * Q
    assert distribution_brute(non_moon, (1, 1, 1)) == P**2 + 2 * Q
    assert distribution_brute(worked, (0,) * 5, range(1, 7)) == ONE
    assert distribution_brute(delta(4), mode="arbitrary").is_symmetric()
    with pytest.raises(ValueError):
        distribution_brute(worked, (0,) * 5, mode="diagonal")


def test_non_moon_sum_over_m_not_symmetric(non_moon):
    total = distribution_of(enumerate_column_injective(non_moon))
    assert not total.is_symmetric()


def test_filling_json_roundtrip(worked):
    F = Filling01.of(worked, [(1, 3), (2, 1)])
    assert Filling01.from_json(F.to_json()) == F
    obj = {"shape": {"rows": [[2, 3], [1, 3], [1, 2]]}, "ones": [[1, 3]]}
    assert Filling01.from_json(obj, validate=False).ones == {(1, 3)}
