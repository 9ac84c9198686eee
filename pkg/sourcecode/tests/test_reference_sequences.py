import pytest

from linkedpartitions.enumeration import distribution, enum_permutations
from linkedpartitions.reference_sequences import (
  IndexOutOfRangeException,
  eulerian,
  eulerian_row,
  schroeder,
)


def test_eulerian_rows():
  assert eulerian_row(1) == (1,)
  assert eulerian_row(3) == (1, 4, 1)
  assert eulerian_row(4) == (1, 11, 11, 1)
  assert eulerian_row(8) == (1, 247, 4293, 15619, 15619, 4293, 247, 1)


@pytest.mark.parametrize("n", range(1, 7))
def test_eulerian_matches_descent_census(n):
  histogram = distribution(enum_permutations(n), "descents")
  assert histogram.counts == dict(enumerate(eulerian_row(n)))


@pytest.mark.parametrize("n,j", [(3, 3), (3, -1), (0, 0)])
def test_eulerian_out_of_range(n, j):
  with pytest.raises(IndexOutOfRangeException):
    eulerian(n, j)


def test_schroeder_table_and_recurrence():
  assert [schroeder(m) for m in range(11)] == [
    1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718
  ]
  assert schroeder(11) == 5293446


def test_schroeder_rejects_negative():
  with pytest.raises(IndexOutOfRangeException):
    schroeder(-1)
