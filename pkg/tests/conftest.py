import pytest

from moonfill.shape import from_rows, polyomino_from_rows, rect_shape


@pytest.fixture
def worked():
    """Five-row shape with lengths (2, 6, 6, 4, 3)."""
    return from_rows([[3, 4], [1, 6], [1, 6], [2, 5], [2, 4]])


@pytest.fixture
def square():
    return rect_shape(2, 2)


@pytest.fixture
def non_moon():
    return polyomino_from_rows([[2, 3], [1, 3], [1, 2]])
