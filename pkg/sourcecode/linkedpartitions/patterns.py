"""Crossings and nestings of arc diagrams, and I2/J2 patterns in dot diagrams.

A pattern occurrence is a witness (i1, i2, j1, j2) of labels with i1 < i2 < j1 < j2,
i1 and i2 rows, j1 and j2 columns.  Three of the four rectangle cells are
constrained and the fourth is free:
  I2: (i1, j2) and (i2, j1) are dots, (i2, j2) is not.
  J2: (i1, j1) and (i2, j2) are dots, (i2, j1) is not.
"""

from itertools import combinations
import logging
from typing import Iterator, List, Optional, Set, Tuple

from .enums import PatternKind
from .linked_partition import Arc, LinkedPartition
from .tableau import Cell, DotDiagram, PermutationTableau, dots_of


logger = logging.getLogger("ptab.patterns")
logger.setLevel(logging.INFO)

ArcPair = Tuple[Arc, Arc]
Witness = Tuple[int, int, int, int]


def crossings(lp: LinkedPartition) -> List[ArcPair]:
  """Arc pairs (i1, j1), (i2, j2) with i1 < i2 < j1 < j2, in lexicographic order."""
  return [
    (first, second)
    for first, second in combinations(lp.arcs, 2)
    if first[0] < second[0] < first[1] < second[1]
  ]


def nestings(lp: LinkedPartition) -> List[ArcPair]:
  """Arc pairs (i1, j1), (i2, j2) with i1 < i2 < j2 < j1, in lexicographic order."""
  return [
    (first, second)
    for first, second in combinations(lp.arcs, 2)
    if first[0] < second[0] < second[1] < first[1]
  ]


def is_noncrossing(lp: LinkedPartition) -> bool:
  return not crossings(lp)


def is_nonnesting(lp: LinkedPartition) -> bool:
  return not nestings(lp)


def _matches(dots: Set[Cell], kind: PatternKind, witness: Witness) -> bool:
  i1, i2, j1, j2 = witness
  if kind == PatternKind.I2:
    return (i1, j2) in dots and (i2, j1) in dots and (i2, j2) not in dots
  return (i1, j1) in dots and (i2, j2) in dots and (i2, j1) not in dots


def pattern_witnesses(d: DotDiagram, kind: PatternKind) -> Iterator[Witness]:
  """Yields every occurrence of kind in d, scanning all label quadruples in lexicographic order."""
  dots = set(d.dots)
  rows = d.shape.rows
  columns = d.shape.columns
  for i1, i2 in combinations(rows, 2):
    for j1, j2 in combinations(columns, 2):
      if i2 < j1 and _matches(dots, kind, (i1, i2, j1, j2)):
        yield (i1, i2, j1, j2)


def find_pattern(d: DotDiagram, kind: PatternKind) -> Optional[Witness]:
  """Lexicographically smallest occurrence of kind in d, or None.

  Every occurrence is pinned by its two constrained dots, so the search runs over
  pairs of dots instead of all label quadruples.
  """
  dots = set(d.dots)
  best: Optional[Witness] = None
  for (rowA, colA), (rowB, colB) in combinations(d.dots, 2):
    if rowA == rowB or colA == colB:
      continue
    # Orient so that `upper` is the dot in the smaller row.
    (i1, upperCol), (i2, lowerCol) = sorted(((rowA, colA), (rowB, colB)))
    if kind == PatternKind.I2:
      witness = (i1, i2, lowerCol, upperCol)
    else:
      witness = (i1, i2, upperCol, lowerCol)
    if not (witness[1] < witness[2] < witness[3]):
      continue
    if _matches(dots, kind, witness) and (best is None or witness < best):
      best = witness
  return best


def contains_i2(t: PermutationTableau) -> Optional[Witness]:
  return find_pattern(dots_of(t), PatternKind.I2)


def contains_j2(t: PermutationTableau) -> Optional[Witness]:
  return find_pattern(dots_of(t), PatternKind.J2)
