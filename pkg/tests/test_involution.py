import pytest
from hypothesis import given, settings, strategies as st

from moonfill.biject import to_compositions
from moonfill.fill import (
    ColumnConflict,
    Filling01,
    chain_stats,
    empty_lines,
    enumerate_column_injective,
    enumerate_row_constrained,
)
from moonfill.involution import check_coloring_consistency, phi, phi_via_g
from moonfill.shape import enumerate_shapes, from_rows, rect_shape

SMALL = list(enumerate_shapes(3, 3))
MID = list(enumerate_shapes(3, 4))


def test_square_diagonal_swaps(square):
    F = Filling01.of(square, [(1, 1), (2, 2)])
    G = phi(F)
    assert G.ones == {(1, 2), (2, 1)}
    assert chain_stats(F) == (0, 1) and chain_stats(G) == (1, 0)
    assert phi(G) == F


def test_palindromic_gaps_are_fixed(square):
    F = Filling01.of(square, [(1, 1)])
    assert to_compositions(F).comps == ((0, 0), (0,))
    assert phi(F) == F
    H = Filling01.of(rect_shape(2, 3), [(1, 2), (2, 1), (2, 3)])
    assert to_compositions(H).comps == ((1, 1), (0, 0, 0))
    assert phi(H) == H


def test_worked_extremes(worked):
    m, A = (1, 2, 1, 0, 1), {2}
    fills = list(enumerate_row_constrained(worked, m, A))
    lo = [F for F in fills if chain_stats(F) == (0, 3)]
    hi = [F for F in fills if chain_stats(F) == (3, 0)]
    assert len(lo) == len(hi) == 1
    assert phi(lo[0]) == hi[0]
    assert hi[0].ones == {(1, 4), (2, 5), (2, 6), (3, 1), (5, 3)}


def test_rejects_column_repeats(square):
    with pytest.raises(ColumnConflict):
        phi(Filling01.of(square, [(1, 1), (2, 1)]))


@pytest.mark.parametrize("T", MID, ids=lambda T: str(T.rows))
def test_phi_factors_through_compositions(T):
    for F in enumerate_column_injective(T):
        assert phi(F) == phi_via_g(F)


@pytest.mark.parametrize("T", SMALL, ids=lambda T: str(T.rows))
def test_involution_properties(T):
    for F in enumerate_column_injective(T):
        check_coloring_consistency(F)
        G = phi(F)
        assert phi(G) == F
        assert chain_stats(G) == chain_stats(F)[::-1]
        assert empty_lines(G)[0] == empty_lines(F)[0]
        assert G.row_counts() == F.row_counts()


@st.composite
def injective_fillings(draw):
    T = draw(st.sampled_from(MID))
    ones = []
    for c in range(1, T.t + 1):
        r = draw(st.sampled_from([None] + T.rows_meeting_column(c)))
        if r is not None:
            ones.append((r, c))
    return Filling01.of(T, ones)


@given(injective_fillings())
@settings(max_examples=300, deadline=None)
def test_involution_random(F):
    G = phi(F, check=True)
    assert phi(G) == F
    assert chain_stats(G) == chain_stats(F)[::-1]


def test_tied_rows_consistency():
    T = from_rows([[1, 1], [1, 2], [1, 1]])
    for F in enumerate_column_injective(T):
        check_coloring_consistency(F)
        assert phi(phi(F)) == F
