import pytest

from linkedpartitions.tableau import (
  EmptyColumnException,
  ForbiddenZeroException,
  InconsistentDotsException,
  InvalidShapeException,
  InvalidTableauException,
  make_dot_diagram,
  make_shape,
  dots_of,
  tableau_from_dots,
  validate_tableau,
)

from conftest import THIRTEEN_FILLING


def test_shape_of_eleven_vertices(eleven_tableau):
  shape = eleven_tableau.shape
  assert shape.rows == (1, 2, 5, 7, 9, 11)
  assert shape.geometric_columns() == (10, 8, 6, 4, 3)
  assert shape.row_lengths() == (5, 5, 3, 2, 1, 0)
  assert shape.direction_word() == "VVHHVHVHVHV"


def test_cell_lookup(eleven_tableau):
  assert eleven_tableau.cell((1, 10)) == 1
  assert eleven_tableau.cell((2, 3)) == 1
  assert eleven_tableau.cell((7, 8)) == 0
  assert not eleven_tableau.shape.has_cell((9, 8))


@pytest.mark.parametrize(
  "n,columns",
  [(3, [1]), (0, []), (3, [4]), (3, [2, 2]), (3, [[2]]), (3, [{"a": 1}]), (3, [True]), (3, [2.0])],
)
def test_make_shape_rejects(n, columns):
  with pytest.raises(InvalidShapeException):
    make_shape(n, columns)


def test_empty_column_named():
  with pytest.raises(EmptyColumnException) as e:
    validate_tableau(make_shape(2, [2]), [[0]])
  assert e.value.column == 2


def test_forbidden_zero_named():
  with pytest.raises(ForbiddenZeroException) as e:
    validate_tableau(make_shape(4, [3, 4]), [[1, 1], [1, 0]])
  assert e.value.cell == (2, 3)


@pytest.mark.parametrize("filling", [[[1, 1]], [[1, 1], [1]], [[1, 2], [1, 1]], [[True, 1], [1, 1]]])
def test_malformed_filling(filling):
  with pytest.raises(InvalidTableauException):
    validate_tableau(make_shape(4, [3, 4]), filling)


def test_dots_of_eleven_vertices(eleven_tableau):
  d = dots_of(eleven_tableau)
  assert d.dots == ((1, 4), (1, 10), (2, 3), (2, 8), (2, 10), (5, 6), (5, 8), (7, 8))
  assert d.topmost_ones() == ((1, 4), (1, 10), (2, 3), (2, 8), (5, 6))
  assert d.restricted_zeros() == ((2, 10), (5, 8), (7, 8))
  assert d.restricted_zero_rows() == (2, 5, 7)
  assert d.empty_rows() == (9, 11)


def test_tableau_from_dots_thirteen_vertices(thirteen_dots):
  t = tableau_from_dots(thirteen_dots)
  assert t.filling == tuple(tuple(row) for row in THIRTEEN_FILLING)
  assert dots_of(t) == thirteen_dots


def test_tableau_from_dots_inverts_dots_of(eleven_tableau, nine_tableau):
  for t in (eleven_tableau, nine_tableau):
    assert tableau_from_dots(dots_of(t)) == t


@pytest.mark.parametrize(
  "dots",
  [
    # column 3 has no dot
    [(1, 4)],
    # row 2 holds two restricted 0's
    [(1, 3), (1, 4), (2, 3), (2, 4)],
    # outside the shape
    [(1, 3), (1, 4), (3, 4)],
  ],
)
def test_make_dot_diagram_rejects(dots):
  with pytest.raises(InconsistentDotsException):
    make_dot_diagram(make_shape(4, [3, 4]), dots)


def test_unrealizable_dots():
  # The restricted 0 at (2, 3) would sit right of the topmost 1 at (2, 4).
  d = make_dot_diagram(make_shape(4, [3, 4]), [(1, 3), (2, 3), (2, 4)])
  with pytest.raises(InconsistentDotsException):
    tableau_from_dots(d)
