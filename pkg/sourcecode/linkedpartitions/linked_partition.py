"""Linked partitions of [n] in their arc representation.

A linked partition is stored as its linear representation: the sorted set of
arcs (i, j), i < j, drawn from the minimum of each multi-element block to every
other member of that block.  The defining local invariant is that each vertex is
the right-hand endpoint of at most one arc; blocks, vertex kinds and the nearly
disjoint property are all derived from the arcs.
"""

from dataclasses import dataclass
from itertools import combinations
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from .enums import VertexKind


logger = logging.getLogger("ptab.linked_partition")
logger.setLevel(logging.INFO)

Arc = Tuple[int, int]
Block = Tuple[int, ...]


class InvalidLinkedPartitionException(ValueError):
  """Raised when arcs or blocks do not describe a linked partition of [n]."""


class ArcOutOfRangeException(InvalidLinkedPartitionException):
  """An arc endpoint lies outside [n], or the arc does not point rightward."""

  def __init__(self, n: int, arc: Arc):
    self.arc = arc
    super().__init__(f"arc {arc} is not a pair 1 <= i < j <= {n}")


class DuplicateArcException(InvalidLinkedPartitionException):
  def __init__(self, arc: Arc):
    self.arc = arc
    super().__init__(f"arc {arc} appears more than once")


class DuplicateRightEndpointException(InvalidLinkedPartitionException):
  """Two arcs end at the same vertex."""

  def __init__(self, vertex: int, arcs: Tuple[Arc, Arc]):
    self.vertex = vertex
    self.arcs = arcs
    super().__init__(f"vertex {vertex} is the right endpoint of both {arcs[0]} and {arcs[1]}")


class NotACoverException(InvalidLinkedPartitionException):
  def __init__(self, n: int, missing: Sequence[int], extra: Sequence[int]):
    self.missing = tuple(missing)
    self.extra = tuple(extra)
    super().__init__(
      f"blocks do not cover [{n}] exactly: missing {list(self.missing)}, outside {list(self.extra)}"
    )


class NotNearlyDisjointException(InvalidLinkedPartitionException):
  """Two blocks share an element that is not the minimum of exactly one of them."""

  def __init__(self, first: Block, second: Block, element: int):
    self.blocks = (first, second)
    self.element = element
    super().__init__(
      f"blocks {set(first)} and {set(second)} share {element} but are not nearly disjoint"
    )


@dataclass(frozen=True)
class LinkedPartition:
  """A linked partition of [n]; arcs are kept in lexicographic order."""

  n: int
  arcs: Tuple[Arc, ...]

  def incoming(self) -> Dict[int, int]:
    """Maps each right endpoint to the left endpoint of its unique incoming arc."""
    return {j: i for (i, j) in self.arcs}

  def outgoing(self) -> Dict[int, List[int]]:
    """Maps each left endpoint to its right endpoints in increasing order."""
    children: Dict[int, List[int]] = {}
    for i, j in self.arcs:
      children.setdefault(i, []).append(j)
    return children

  def restrict(self, m: int) -> "LinkedPartition":
    """Drops the vertices m+1..n together with every arc touching them."""
    assert 1 <= m <= self.n, f"cannot restrict [{self.n}] to [{m}]"
    return LinkedPartition(m, tuple(arc for arc in self.arcs if arc[1] <= m))


@dataclass(frozen=True)
class VertexClassification:
  """Kinds of all vertices plus the two sorted lists used by the descent bijection.

  blockMinima holds origins, transients and singletons (one per block);
  destinations holds the vertices that are only right-hand endpoints.
  """

  kinds: Dict[int, VertexKind]
  blockMinima: Tuple[int, ...]
  destinations: Tuple[int, ...]

  def of_kind(self, kind: VertexKind) -> Tuple[int, ...]:
    return tuple(v for v in sorted(self.kinds) if self.kinds[v] == kind)

  @property
  def origins(self) -> Tuple[int, ...]:
    return self.of_kind(VertexKind.Origin)

  @property
  def transients(self) -> Tuple[int, ...]:
    return self.of_kind(VertexKind.Transient)

  @property
  def singletons(self) -> Tuple[int, ...]:
    return self.of_kind(VertexKind.Singleton)


def check_size(n: int) -> None:
  if isinstance(n, bool) or not isinstance(n, int) or n < 1:
    raise InvalidLinkedPartitionException(f"ground set size must be a positive integer, got {n!r}")


def validate_arcs(n: int, arcs: Iterable[Sequence[int]]) -> LinkedPartition:
  """Builds the canonical LinkedPartition for an arc list.

  Args:
    n: ground set size.
    arcs: pairs (i, j) in any order.

  Returns:
    LinkedPartition with arcs sorted lexicographically.

  Raises:
    ArcOutOfRangeException, DuplicateArcException, DuplicateRightEndpointException.
  """
  check_size(n)
  seen: Dict[Arc, None] = {}
  for raw in arcs:
    if len(raw) != 2:
      raise InvalidLinkedPartitionException(f"arc {tuple(raw)} is not a pair")
    i, j = raw
    if isinstance(i, bool) or isinstance(j, bool) or not isinstance(i, int) or not isinstance(j, int):
      raise InvalidLinkedPartitionException(f"arc {tuple(raw)} has non-integer endpoints")
    arc = (i, j)
    if not (1 <= i < j <= n):
      raise ArcOutOfRangeException(n, arc)
    if arc in seen:
      raise DuplicateArcException(arc)
    seen[arc] = None
  ordered = tuple(sorted(seen))
  rightEndpoints: Dict[int, Arc] = {}
  for arc in ordered:
    if arc[1] in rightEndpoints:
      raise DuplicateRightEndpointException(arc[1], (rightEndpoints[arc[1]], arc))
    rightEndpoints[arc[1]] = arc
  return LinkedPartition(n, ordered)


def blocks_of(lp: LinkedPartition) -> List[Block]:
  """Derives the blocks of lp, sorted by their minima.

  Each left endpoint i contributes {i} plus its right endpoints; each isolated
  vertex contributes a singleton block.
  """
  children = lp.outgoing()
  incoming = lp.incoming()
  blocks: List[Block] = []
  for v in range(1, lp.n + 1):
    if v in children:
      blocks.append(tuple([v] + children[v]))
    elif v not in incoming:
      blocks.append((v,))
  return blocks


def _nearly_disjoint_at(first: Block, second: Block, element: int) -> bool:
  return (element == first[0] and len(first) > 1 and element != second[0]) or (
    element == second[0] and len(second) > 1 and element != first[0]
  )


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> LinkedPartition:
  """Builds the arc representation of a block list.

  Raises:
    NotACoverException if the blocks do not cover [n] exactly or one is empty.
    NotNearlyDisjointException naming the first offending pair and shared element.
  """
  check_size(n)
  normalized: List[Block] = []
  for block in blocks:
    members = tuple(sorted(set(block)))
    if not members:
      raise NotACoverException(n, [], [])
    normalized.append(members)
  covered = set().union(*normalized) if normalized else set()
  expected = set(range(1, n + 1))
  if covered != expected:
    raise NotACoverException(n, sorted(expected - covered), sorted(covered - expected))
  for first, second in combinations(normalized, 2):
    for element in sorted(set(first) & set(second)):
      if not _nearly_disjoint_at(first, second, element):
        raise NotNearlyDisjointException(first, second, element)
  arcs = [(block[0], member) for block in normalized for member in block[1:]]
  return validate_arcs(n, arcs)


def classify_vertices(lp: LinkedPartition) -> VertexClassification:
  children = lp.outgoing()
  incoming = lp.incoming()
  kinds: Dict[int, VertexKind] = {}
  for v in range(1, lp.n + 1):
    isLeft = v in children
    isRight = v in incoming
    if isLeft and isRight:
      kinds[v] = VertexKind.Transient
    elif isLeft:
      kinds[v] = VertexKind.Origin
    elif isRight:
      kinds[v] = VertexKind.Destination
    else:
      kinds[v] = VertexKind.Singleton
  blockMinima = tuple(v for v in range(1, lp.n + 1) if kinds[v] != VertexKind.Destination)
  destinations = tuple(v for v in range(1, lp.n + 1) if kinds[v] == VertexKind.Destination)
  return VertexClassification(kinds, blockMinima, destinations)


def block_count(lp: LinkedPartition) -> int:
  """Number of blocks: every vertex except the destinations is a block minimum."""
  children = lp.outgoing()
  return lp.n - sum(1 for (_, j) in lp.arcs if j not in children)
