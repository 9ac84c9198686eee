"""Exhaustive, rank-addressable streams and the statistics computed over them.

Linked partitions of [n] are in bijection with predecessor vectors (p_2, ..., p_n),
p_v in {0, ..., v-1}: p_v = u > 0 means the arc (u, v), p_v = 0 means v has no
incoming arc.  Streams visit the vectors in lexicographic order, p_2 most
significant, so the rank of a vector is its mixed-radix value.  Permutations
are ranked by their Lehmer code, which is lexicographic order.

The tableau oracle enumerates every 0/1 filling of every shape and keeps the
valid ones.  It never goes through the bijections.
"""

from dataclasses import dataclass, field
from itertools import product
import logging
from math import factorial
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Union

from . import constants as c
from .enums import Filter, ObjectKind, Statistic, from_value
from .linked_partition import LinkedPartition, block_count, check_size, classify_vertices
from .patterns import contains_i2, contains_j2, crossings, is_noncrossing, is_nonnesting, nestings
from .permutation import InvalidPermutationException, Permutation, descents, weak_excedances
from .tableau import (
  InvalidTableauException,
  PermutationTableau,
  dots_of,
  make_shape,
  validate_tableau,
)

import pandas as pd


logger = logging.getLogger("ptab.enumeration")
logger.setLevel(logging.INFO)

DomainObject = Union[LinkedPartition, Permutation, PermutationTableau]


class CostGuardException(ValueError):
  """Raised when an exhaustive computation is requested beyond its size guard."""


class UnknownStatisticException(ValueError):
  pass


class IncompatibleFilterException(ValueError):
  """A stream filter does not apply to the requested object family."""


def _check_permutation_size(n: int) -> None:
  if isinstance(n, bool) or not isinstance(n, int) or n < 1:
    raise InvalidPermutationException(f"permutation size must be a positive integer, got {n!r}")


def _check_rank(n: int, rank: int) -> None:
  total = factorial(n)
  if isinstance(rank, bool) or not isinstance(rank, int) or not (0 <= rank < total):
    raise ValueError(f"rank {rank!r} is outside [0, {total}) for n={n}")


def _rank_range(n: int, start: int, stop: Optional[int]) -> range:
  total = factorial(n)
  stop = total if stop is None else min(stop, total)
  assert 0 <= start, f"negative start rank {start}"
  return range(start, max(start, stop))


def predecessor_vector(lp: LinkedPartition) -> List[int]:
  incoming = lp.incoming()
  return [incoming.get(v, 0) for v in range(2, lp.n + 1)]


def rank_linked_partition(lp: LinkedPartition) -> int:
  rank = 0
  for v, predecessor in zip(range(2, lp.n + 1), predecessor_vector(lp)):
    rank = rank * v + predecessor
  return rank


def unrank_linked_partition(n: int, rank: int) -> LinkedPartition:
  check_size(n)
  _check_rank(n, rank)
  arcs = []
  for v in range(n, 1, -1):
    rank, predecessor = divmod(rank, v)
    if predecessor:
      arcs.append((predecessor, v))
  return LinkedPartition(n, tuple(sorted(arcs)))


def rank_permutation(p: Permutation) -> int:
  remaining = list(range(1, p.n + 1))
  rank = 0
  for position, value in enumerate(p.values):
    index = remaining.index(value)
    rank += index * factorial(p.n - 1 - position)
    remaining.pop(index)
  return rank


def unrank_permutation(n: int, rank: int) -> Permutation:
  _check_permutation_size(n)
  _check_rank(n, rank)
  remaining = list(range(1, n + 1))
  values = []
  for size in range(n, 0, -1):
    index, rank = divmod(rank, factorial(size - 1))
    values.append(remaining.pop(index))
  return Permutation(n, tuple(values))


def enum_linked_partitions(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[LinkedPartition]:
  """Linked partitions of [n] with rank in [start, stop), in rank order."""
  check_size(n)
  for rank in _rank_range(n, start, stop):
    yield unrank_linked_partition(n, rank)


def enum_permutations(n: int, start: int = 0, stop: Optional[int] = None) -> Iterator[Permutation]:
  """Permutations of [n] with rank in [start, stop), in lexicographic order."""
  _check_permutation_size(n)
  for rank in _rank_range(n, start, stop):
    yield unrank_permutation(n, rank)


def enum_tableaux_bruteforce(n: int) -> Iterator[PermutationTableau]:
  """Every permutation tableau of length n, found by filtering raw fillings.

  Shapes are visited in increasing order of the column-set bitmask (label v is
  bit v-2), fillings in binary order with the first cell most significant.

  Raises:
    CostGuardException if n exceeds the oracle guard.
  """
  if isinstance(n, int) and n > c.maxOracleN:
    raise CostGuardException(f"the tableau oracle is limited to n <= {c.maxOracleN}, got {n}")
  if isinstance(n, bool) or not isinstance(n, int) or n < 1:
    raise InvalidTableauException(f"tableau length must be a positive integer, got {n!r}")
  for mask in range(2 ** (n - 1)):
    shape = make_shape(n, [v for v in range(2, n + 1) if mask >> (v - 2) & 1])
    lengths = shape.row_lengths()
    for bits in product((0, 1), repeat=sum(lengths)):
      filling = []
      offset = 0
      for length in lengths:
        filling.append(bits[offset : offset + length])
        offset += length
      try:
        yield validate_tableau(shape, filling)
      except InvalidTableauException:
        continue


def object_kind(obj: DomainObject) -> ObjectKind:
  if isinstance(obj, LinkedPartition):
    return ObjectKind.LinkedPartition
  if isinstance(obj, Permutation):
    return ObjectKind.Permutation
  if isinstance(obj, PermutationTableau):
    return ObjectKind.Tableau
  raise TypeError(f"unsupported object {obj!r}")


def enum_objects(
  kind: ObjectKind, n: int, start: int = 0, stop: Optional[int] = None
) -> Iterator[DomainObject]:
  """Module enumeration order for each family; tableaux come from the oracle.

  Raises:
    CostGuardException if n exceeds the guard of the family.
  """
  if kind != ObjectKind.Tableau and isinstance(n, int) and n > c.maxFactorialN:
    raise CostGuardException(f"{kind.value} streams are limited to n <= {c.maxFactorialN}, got {n}")
  if kind == ObjectKind.LinkedPartition:
    return enum_linked_partitions(n, start, stop)
  if kind == ObjectKind.Permutation:
    return enum_permutations(n, start, stop)
  assert start == 0 and stop is None, "the tableau oracle is not rank addressable"
  return enum_tableaux_bruteforce(n)


_statistics: Dict[ObjectKind, Dict[Statistic, Callable[..., int]]] = {
  ObjectKind.LinkedPartition: {
    Statistic.Blocks: block_count,
    Statistic.Arcs: lambda lp: len(lp.arcs),
    Statistic.Crossings: lambda lp: len(crossings(lp)),
    Statistic.Nestings: lambda lp: len(nestings(lp)),
    Statistic.Transients: lambda lp: len(classify_vertices(lp).transients),
    Statistic.Singletons: lambda lp: len(classify_vertices(lp).singletons),
  },
  ObjectKind.Permutation: {
    Statistic.Descents: lambda p: len(descents(p)),
    Statistic.WeakExcedances: weak_excedances,
  },
  ObjectKind.Tableau: {
    Statistic.Rows: lambda t: len(t.shape.rows),
    Statistic.Columns: lambda t: len(t.shape.columns),
    Statistic.Dots: lambda t: len(dots_of(t).dots),
    Statistic.Transients: lambda t: len(dots_of(t).restricted_zeros()),
    Statistic.Singletons: lambda t: len(dots_of(t).empty_rows()),
  },
}


def resolve_statistic(statistic: Union[Statistic, str]) -> Statistic:
  if isinstance(statistic, Statistic):
    return statistic
  try:
    return from_value(Statistic, statistic)
  except ValueError:
    raise UnknownStatisticException(f"unknown statistic {statistic!r}")


def supported_statistics(kind: ObjectKind) -> List[Statistic]:
  return list(_statistics[kind])


def statistic_function(kind: ObjectKind, statistic: Union[Statistic, str]) -> Callable[..., int]:
  """Raises UnknownStatisticException if statistic is not defined on kind."""
  statistic = resolve_statistic(statistic)
  if statistic not in _statistics[kind]:
    raise UnknownStatisticException(
      f"statistic {statistic.value} is not defined for {kind.value}; "
      f"choose from {[s.value for s in supported_statistics(kind)]}"
    )
  return _statistics[kind][statistic]


@dataclass
class Histogram:
  """Exact census of a statistic: value -> count, plus the number of objects."""

  counts: Dict[int, int] = field(default_factory=dict)
  total: int = 0

  def __post_init__(self):
    assert sum(self.counts.values()) == self.total, "histogram counts do not add up to total"
    self.counts = dict(sorted(self.counts.items()))

  def merge(self, other: "Histogram") -> "Histogram":
    merged = dict(self.counts)
    for value, count in other.counts.items():
      merged[value] = merged.get(value, 0) + count
    return Histogram(merged, self.total + other.total)

  def as_json(self) -> Dict[str, int]:
    return {str(value): count for value, count in self.counts.items()}

  def as_series(self) -> pd.Series:
    return pd.Series(self.counts, dtype="int64")


def census(stream: Iterable[DomainObject], statistics: Sequence[Union[Statistic, str]]) -> pd.DataFrame:
  """One row per object, one int64 column per statistic (named by its value)."""
  resolved = [resolve_statistic(statistic) for statistic in statistics]
  columns = [statistic.value for statistic in resolved]
  records = []
  for obj in stream:
    kind = object_kind(obj)
    records.append([statistic_function(kind, statistic)(obj) for statistic in resolved])
  return pd.DataFrame(records, columns=columns, dtype="int64")


def distribution(stream: Iterable[DomainObject], statistic: Union[Statistic, str]) -> Histogram:
  """Exact histogram of statistic over stream.

  Raises:
    UnknownStatisticException if the name is unknown or undefined on the objects.
  """
  statistic = resolve_statistic(statistic)
  table = census(stream, [statistic])
  counts = table[statistic.value].value_counts().sort_index()
  return Histogram({int(value): int(count) for value, count in counts.items()}, len(table))


def counts_by_size(kind: ObjectKind, nValues: Iterable[int], predicate: Callable[..., bool]) -> pd.Series:
  """Number of objects of each size in nValues that satisfy predicate, indexed by n."""
  return pd.Series(
    {n: sum(1 for obj in enum_objects(kind, n) if predicate(obj)) for n in nValues}, dtype="int64"
  )


@dataclass(frozen=True)
class StreamFilter:
  """Conjunction of the enumerate/count filters.  blocks applies to linked partitions."""

  blocks: Optional[int] = None
  filters: FrozenSet[Filter] = frozenset()

  def check_applicable(self, kind: ObjectKind) -> None:
    """Raises IncompatibleFilterException naming the first filter that does not apply to kind."""
    if self.blocks is not None and kind != ObjectKind.LinkedPartition:
      raise IncompatibleFilterException(f"--blocks applies to lp, not {kind.value}")
    for name in sorted(self.filters, key=lambda f: f.value):
      allowed = (
        ObjectKind.LinkedPartition
        if name in (Filter.Noncrossing, Filter.Nonnesting)
        else ObjectKind.Tableau
      )
      if kind != allowed:
        raise IncompatibleFilterException(f"{name.value} applies to {allowed.value}, not {kind.value}")

  def accepts(self, obj: DomainObject) -> bool:
    if self.blocks is not None and block_count(obj) != self.blocks:
      return False
    for name in self.filters:
      if name == Filter.Noncrossing and not is_noncrossing(obj):
        return False
      if name == Filter.Nonnesting and not is_nonnesting(obj):
        return False
      if name == Filter.I2Avoiding and contains_i2(obj) is not None:
        return False
      if name == Filter.J2Avoiding and contains_j2(obj) is not None:
        return False
    return True

  def apply(self, stream: Iterable[DomainObject]) -> Iterator[DomainObject]:
    return (obj for obj in stream if self.accepts(obj))
