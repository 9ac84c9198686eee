import pytest

from linkedpartitions.bijections import lp_to_tableau
from linkedpartitions.enumeration import enum_linked_partitions
from linkedpartitions.enums import PatternKind
from linkedpartitions.linked_partition import validate_arcs
from linkedpartitions.patterns import (
  contains_i2,
  contains_j2,
  crossings,
  find_pattern,
  is_noncrossing,
  is_nonnesting,
  nestings,
  pattern_witnesses,
)
from linkedpartitions.tableau import dots_of


def test_crossings_and_nestings_of_nine_vertices(nine_lp):
  assert crossings(nine_lp) == [((1, 4), (3, 9))]
  assert nestings(nine_lp) == [((1, 4), (2, 3)), ((3, 9), (5, 6)), ((3, 9), (6, 7))]
  assert not is_noncrossing(nine_lp)
  assert not is_nonnesting(nine_lp)


def test_crossing_pair():
  lp = validate_arcs(4, [(1, 3), (2, 4)])
  assert crossings(lp) == [((1, 3), (2, 4))]
  assert nestings(lp) == []
  assert not is_noncrossing(lp)
  assert is_nonnesting(lp)


def test_shared_endpoints_neither_cross_nor_nest():
  lp = validate_arcs(3, [(1, 2), (1, 3)])
  assert is_noncrossing(lp)
  assert is_nonnesting(lp)
  chain = validate_arcs(3, [(1, 2), (2, 3)])
  assert is_noncrossing(chain)
  assert is_nonnesting(chain)


def test_nesting_has_i2_not_j2(nesting_lp):
  t = lp_to_tableau(nesting_lp)
  assert contains_i2(t) == (1, 2, 3, 4)
  assert contains_j2(t) is None


def test_thirteen_vertices_avoids_i2_contains_j2(thirteen_dots):
  assert find_pattern(thirteen_dots, PatternKind.I2) is None
  assert find_pattern(thirteen_dots, PatternKind.J2) == (1, 2, 3, 6)
  assert next(pattern_witnesses(thirteen_dots, PatternKind.J2)) == (1, 2, 3, 6)


def test_nonnesting_with_i2():
  # Crossings only, yet the dot diagram holds an I2.
  lp = validate_arcs(5, [(1, 3), (2, 4), (3, 5)])
  assert is_nonnesting(lp)
  d = dots_of(lp_to_tableau(lp))
  assert d.dots == ((1, 5), (2, 4), (3, 5))
  assert find_pattern(d, PatternKind.I2) == (1, 2, 4, 5)
  assert find_pattern(d, PatternKind.J2) == (2, 3, 4, 5)


def test_nesting_without_i2():
  lp = validate_arcs(5, [(1, 4), (2, 3), (3, 5)])
  assert not is_nonnesting(lp)
  d = dots_of(lp_to_tableau(lp))
  assert d.dots == ((1, 4), (2, 5), (3, 5))
  assert find_pattern(d, PatternKind.I2) is None


@pytest.mark.parametrize("n", range(1, 7))
def test_noncrossing_iff_j2_avoiding(n):
  for lp in enum_linked_partitions(n):
    assert is_noncrossing(lp) == (contains_j2(lp_to_tableau(lp)) is None)


@pytest.mark.parametrize("n", range(1, 7))
def test_search_matches_brute_force(n):
  for lp in enum_linked_partitions(n):
    d = dots_of(lp_to_tableau(lp))
    for kind in PatternKind:
      assert find_pattern(d, kind) == next(pattern_witnesses(d, kind), None)
