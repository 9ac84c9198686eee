from itertools import combinations
from math import factorial

import pytest

from linkedpartitions.enumeration import enum_linked_partitions
from linkedpartitions.enums import VertexKind
from linkedpartitions.linked_partition import (
  ArcOutOfRangeException,
  DuplicateArcException,
  DuplicateRightEndpointException,
  InvalidLinkedPartitionException,
  NotACoverException,
  NotNearlyDisjointException,
  block_count,
  blocks_of,
  classify_vertices,
  from_blocks,
  validate_arcs,
)

from conftest import NINE_ARCS


def test_validate_arcs_sorts_canonically():
  lp = validate_arcs(9, reversed(NINE_ARCS))
  assert lp.arcs == tuple(NINE_ARCS)
  assert lp.n == 9


def test_validate_arcs_single_vertex():
  lp = validate_arcs(1, [])
  assert lp.arcs == ()
  assert blocks_of(lp) == [(1,)]


@pytest.mark.parametrize(
  "n,arcs,exception",
  [
    (4, [(1, 3), (2, 3)], DuplicateRightEndpointException),
    (3, [(2, 2)], ArcOutOfRangeException),
    (3, [(3, 1)], ArcOutOfRangeException),
    (3, [(1, 4)], ArcOutOfRangeException),
    (3, [(1, 2), (1, 2)], DuplicateArcException),
    (0, [], InvalidLinkedPartitionException),
  ],
)
def test_validate_arcs_rejects(n, arcs, exception):
  with pytest.raises(exception):
    validate_arcs(n, arcs)


def test_duplicate_right_endpoint_names_vertex():
  with pytest.raises(DuplicateRightEndpointException) as e:
    validate_arcs(4, [(1, 3), (2, 3)])
  assert e.value.vertex == 3
  assert e.value.arcs == ((1, 3), (2, 3))


def test_blocks_of_nine_vertices(nine_lp):
  assert blocks_of(nine_lp) == [(1, 2, 4), (2, 3), (3, 9), (5, 6), (6, 7), (8,)]
  assert block_count(nine_lp) == 6


@pytest.mark.parametrize(
  "n,arcs,blocks",
  [
    (3, [(1, 2), (1, 3)], [(1, 2, 3)]),
    (2, [], [(1,), (2,)]),
    (3, [(1, 2), (2, 3)], [(1, 2), (2, 3)]),
  ],
)
def test_blocks_of_small(n, arcs, blocks):
  assert blocks_of(validate_arcs(n, arcs)) == blocks


def test_from_blocks_nine_vertices(nine_lp):
  lp = from_blocks(9, [{1, 2, 4}, {2, 3}, {3, 9}, {5, 6}, {6, 7}, {8}])
  assert lp == nine_lp


def test_from_blocks_chain():
  assert from_blocks(3, [{1, 2}, {2, 3}]).arcs == ((1, 2), (2, 3))


def test_from_blocks_not_nearly_disjoint():
  with pytest.raises(NotNearlyDisjointException) as e:
    from_blocks(3, [{1, 3}, {2, 3}])
  assert e.value.element == 3
  assert e.value.blocks == ((1, 3), (2, 3))


@pytest.mark.parametrize("blocks", [[{1, 2}], [{1, 2}, {3, 4}], [{1, 2}, set(), {3}]])
def test_from_blocks_not_a_cover(blocks):
  with pytest.raises(NotACoverException):
    from_blocks(3, blocks)


def test_classify_nine_vertices(nine_lp):
  kinds = classify_vertices(nine_lp)
  assert kinds.origins == (1, 5)
  assert kinds.transients == (2, 3, 6)
  assert kinds.singletons == (8,)
  assert kinds.destinations == (4, 7, 9)
  assert kinds.blockMinima == (1, 2, 3, 5, 6, 8)


def test_classify_eleven_vertices(eleven_lp):
  kinds = classify_vertices(eleven_lp)
  assert kinds.origins == (1,)
  assert kinds.transients == (2, 5, 7)
  assert kinds.singletons == (9, 11)
  assert kinds.destinations == (3, 4, 6, 8, 10)


def test_classify_all_singletons():
  kinds = classify_vertices(validate_arcs(3, []))
  assert all(kind == VertexKind.Singleton for kind in kinds.kinds.values())
  assert kinds.destinations == ()


def test_restrict_drops_arcs_into_removed_vertices(nine_lp):
  assert nine_lp.restrict(4).arcs == ((1, 2), (1, 4), (2, 3))
  assert nine_lp.restrict(1).arcs == ()


@pytest.mark.parametrize("n", range(1, 5))
def test_nearly_disjoint_families_are_the_linked_partitions(n):
  subsets = [
    frozenset(members) for size in range(1, n + 1) for members in combinations(range(1, n + 1), size)
  ]
  accepted = {}
  for count in range(1, n + 1):
    for family in combinations(subsets, count):
      try:
        lp = from_blocks(n, family)
      except InvalidLinkedPartitionException:
        continue
      assert lp not in accepted
      accepted[lp] = sorted(tuple(sorted(block)) for block in family)
  assert set(accepted) == set(enum_linked_partitions(n))
  assert len(accepted) == factorial(n)
  for lp, blocks in accepted.items():
    assert blocks_of(lp) == blocks
