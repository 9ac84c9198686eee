"""Bijections between linked partitions, permutations and permutation tableaux.

lp_to_perm / perm_to_lp send a linked partition of [n] with k blocks to a
permutation of [n] with k-1 descents by inserting n = 1, 2, ... into a growing
word.  lp_to_tableau / tableau_to_lp form a shape-preserving bijection with
permutation tableaux of length n with k rows, built from the arc paths of the
linear representation.
"""

import logging
from typing import Dict, Iterable, List, Set, Tuple

from .linked_partition import (
  Arc,
  LinkedPartition,
  block_count,
  classify_vertices,
  validate_arcs,
)
from .permutation import Permutation, ascents, descents
from .tableau import (
  Cell,
  DotDiagram,
  PermutationTableau,
  Shape,
  dots_of,
  make_shape,
  tableau_from_dots,
)


logger = logging.getLogger("ptab.bijections")
logger.setLevel(logging.INFO)


def _insertion_anchor(lp: LinkedPartition, v: int) -> int:
  """Minimum of the block of lp containing v once vertices above v are dropped."""
  for i, j in lp.arcs:
    if j == v:
      return i
  return v


def lp_to_perm(lp: LinkedPartition) -> Permutation:
  """Maps a linked partition with k blocks to a permutation with k-1 descents.

  Vertices are inserted in increasing order.  With tau' the partition restricted
  to [v-1], i_1 < ... < i_s its block minima, j_1 < ... < j_t its destinations
  and k the left endpoint of the arc into v (k = v when v is isolated in [v]):
    k = i_r, r < s:  insert v after the r-th descent of the current word,
    k = i_s:         append v,
    k = j_r:         insert v after the r-th ascent,
    k = v:           prepend v.
  """
  word: List[int] = [1]
  for v in range(2, lp.n + 1):
    previous = classify_vertices(lp.restrict(v - 1))
    minima = previous.blockMinima
    destinations = previous.destinations
    current = Permutation(v - 1, tuple(word))
    anchor = _insertion_anchor(lp, v)
    if anchor == v:
      word.insert(0, v)
    elif anchor == minima[-1]:
      word.append(v)
    elif anchor in minima:
      positions = descents(current)
      assert len(positions) == len(minima) - 1, (
        f"word {word} has {len(positions)} descents but [{v - 1}] has {len(minima)} blocks"
      )
      word.insert(positions[minima.index(anchor)], v)
    else:
      assert anchor in destinations, f"{anchor} is neither a block minimum nor a destination"
      positions = ascents(current)
      assert len(positions) == len(destinations), (
        f"word {word} has {len(positions)} ascents but [{v - 1}] has {len(destinations)} destinations"
      )
      word.insert(positions[destinations.index(anchor)], v)
  result = Permutation(lp.n, tuple(word))
  assert len(descents(result)) == block_count(lp) - 1
  return result


def perm_to_lp(p: Permutation) -> LinkedPartition:
  """Inverts lp_to_perm by deleting n, n-1, ... and replaying the insertions."""
  words: Dict[int, Tuple[int, ...]] = {p.n: p.values}
  for v in range(p.n, 1, -1):
    words[v - 1] = tuple(value for value in words[v] if value != v)
  arcs: List[Arc] = []
  for v in range(2, p.n + 1):
    previous = classify_vertices(LinkedPartition(v - 1, tuple(sorted(arcs))))
    minima = previous.blockMinima
    position = words[v].index(v)
    if position == 0:
      continue
    if position == v - 1:
      arcs.append((minima[-1], v))
      continue
    prior = Permutation(v - 1, words[v - 1])
    # v sits between pi_l and pi_{l+1} of the shorter word, with l = position.
    if prior.values[position - 1] > prior.values[position]:
      rank = descents(prior).index(position)
      assert rank < len(minima) - 1, f"descent {position} of {prior} has no matching block"
      arcs.append((minima[rank], v))
    else:
      rank = ascents(prior).index(position)
      arcs.append((previous.destinations[rank], v))
  return validate_arcs(p.n, arcs)


def shape_of(lp: LinkedPartition) -> Shape:
  """Destinations become columns (H steps); every other vertex is a row."""
  return make_shape(lp.n, classify_vertices(lp).destinations)


def extract_paths(lp: LinkedPartition) -> List[Tuple[int, ...]]:
  """Decomposes the arcs into the paths used by lp_to_tableau, in extraction order.

  Each round takes the minimal origin of the residual arcs, the largest residual
  destination reachable from it, and the unique path between them, then removes
  that path's arcs.  Destinations are taken relative to the residual arc set.
  """
  originalChildren = lp.outgoing()
  residual: Set[Arc] = set(lp.arcs)
  paths: List[Tuple[int, ...]] = []
  while residual:
    children: Dict[int, List[int]] = {}
    parents: Dict[int, int] = {}
    for i, j in residual:
      children.setdefault(i, []).append(j)
      parents[j] = i
    start = min(v for v in children if v not in parents)
    reachable: Set[int] = set()
    stack = [start]
    while stack:
      for w in children.get(stack.pop(), []):
        if w not in reachable:
          reachable.add(w)
          stack.append(w)
    end = max(w for w in reachable if w not in children)
    path = [end]
    while path[-1] != start:
      path.append(parents[path[-1]])
    path.reverse()
    for u in path[1:-1]:
      assert sorted(children[u]) == originalChildren[u], (
        f"transient {u} lost outgoing arcs before its incoming arc was used"
      )
    for a, b in zip(path, path[1:]):
      residual.remove((a, b))
    paths.append(tuple(path))
  return paths


def lp_to_tableau(lp: LinkedPartition) -> PermutationTableau:
  """Maps a linked partition with k blocks to a tableau of the same shape with k rows.

  Every extracted path (i_1, i_2, ..., i_m, j) puts a topmost 1 at (i_1, j) and
  rightmost restricted 0's at (i_2, j), ..., (i_m, j); the filling is the unique
  tableau with those dots.
  """
  shape = shape_of(lp)
  dots: List[Cell] = []
  for path in extract_paths(lp):
    end = path[-1]
    dots.extend((vertex, end) for vertex in path[:-1])
  diagram = DotDiagram(shape, tuple(sorted(dots)))
  tableau = tableau_from_dots(diagram)
  assert len(tableau.shape.rows) == block_count(lp)
  return tableau


def _arcs_from_dots(d: DotDiagram, columnOrder: Iterable[int]) -> List[Arc]:
  columnRows = d.column_rows()
  arcs: List[Arc] = []
  for col in columnOrder:
    chain = columnRows[col] + [col]
    arcs.extend(zip(chain, chain[1:]))
  return arcs


def tableau_to_lp(t: PermutationTableau) -> LinkedPartition:
  """Inverts lp_to_tableau column by column.

  A column j with topmost 1 in row i and rightmost restricted 0's in rows
  i_2 < ... < i_m yields the arc chain (i, i_2), ..., (i_m, j).
  """
  d = dots_of(t)
  leftmostFirst = _arcs_from_dots(d, t.shape.geometric_columns())
  rightmostFirst = _arcs_from_dots(d, t.shape.columns)
  assert sorted(leftmostFirst) == sorted(rightmostFirst), "column order changed the arc set"
  lp = validate_arcs(t.shape.n, leftmostFirst)
  assert shape_of(lp) == t.shape
  return lp


def perm_to_tableau(p: Permutation) -> PermutationTableau:
  """Sends a permutation with k-1 descents to a tableau with k rows."""
  return lp_to_tableau(perm_to_lp(p))


def tableau_to_perm(t: PermutationTableau) -> Permutation:
  """Sends a tableau with k rows to a permutation with k-1 descents."""
  return lp_to_perm(tableau_to_lp(t))
