import pytest

from linkedpartitions.linked_partition import LinkedPartition, validate_arcs
from linkedpartitions.tableau import (
  DotDiagram,
  PermutationTableau,
  make_dot_diagram,
  make_shape,
  validate_tableau,
)


NINE_ARCS = [(1, 2), (1, 4), (2, 3), (3, 9), (5, 6), (6, 7)]
ELEVEN_COLUMNS = [3, 4, 6, 8, 10]
ELEVEN_FILLING = [[1, 0, 0, 1, 0], [0, 1, 0, 1, 1], [0, 0, 1], [0, 0], [1], []]
NINE_FILLING = [[1, 0, 1], [0, 0, 1], [0, 0, 1], [1, 1], [0, 0], [1]]
ELEVEN_ARCS = [(1, 2), (1, 4), (2, 3), (2, 5), (2, 10), (5, 6), (5, 7), (7, 8)]
THIRTEEN_COLUMNS = [3, 6, 7, 10, 11, 12, 13]
THIRTEEN_DOTS = [(1, 3), (1, 13), (2, 6), (2, 7), (2, 13), (8, 10), (8, 11), (8, 12), (8, 13)]
THIRTEEN_FILLING = [
  [1, 0, 0, 0, 0, 0, 1],
  [0, 0, 0, 0, 1, 1, 1],
  [1, 0, 0, 0, 1, 1],
  [1, 0, 0, 0, 1, 1],
  [0, 1, 1, 1],
  [1, 1, 1, 1],
]


@pytest.fixture
def nine_lp() -> LinkedPartition:
  return validate_arcs(9, NINE_ARCS)


@pytest.fixture
def eleven_tableau() -> PermutationTableau:
  return validate_tableau(make_shape(11, ELEVEN_COLUMNS), ELEVEN_FILLING)


@pytest.fixture
def nine_tableau() -> PermutationTableau:
  return validate_tableau(make_shape(9, [4, 7, 9]), NINE_FILLING)


@pytest.fixture
def eleven_lp() -> LinkedPartition:
  return validate_arcs(11, ELEVEN_ARCS)


@pytest.fixture
def thirteen_dots() -> DotDiagram:
  return make_dot_diagram(make_shape(13, THIRTEEN_COLUMNS), THIRTEEN_DOTS)


@pytest.fixture
def nesting_lp() -> LinkedPartition:
  """{1,4}{2,3}: the smallest nesting."""
  return validate_arcs(4, [(1, 4), (2, 3)])
