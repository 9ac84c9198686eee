from dataclasses import dataclass
import logging
from typing import Iterable, List, Optional, Tuple


logger = logging.getLogger("ptab.permutation")
logger.setLevel(logging.INFO)


class InvalidPermutationException(ValueError):
  """Raised when a value sequence is not an arrangement of 1..n."""


@dataclass(frozen=True)
class Permutation:
  """A permutation pi_1 pi_2 ... pi_n of [n] in one-line notation."""

  n: int
  values: Tuple[int, ...]

  def __str__(self) -> str:
    return " ".join(str(v) for v in self.values)


def validate_permutation(values: Iterable[int], n: Optional[int] = None) -> Permutation:
  """Builds a Permutation, checking that values is an arrangement of 1..n.

  Args:
    values: one-line notation.
    n: expected size; defaults to len(values).

  Raises:
    InvalidPermutationException
  """
  values = tuple(values)
  if n is None:
    n = len(values)
  if isinstance(n, bool) or not isinstance(n, int) or n < 1:
    raise InvalidPermutationException(f"permutation size must be a positive integer, got {n!r}")
  if len(values) != n:
    raise InvalidPermutationException(f"expected {n} values, got {len(values)}")
  if any(isinstance(v, bool) or not isinstance(v, int) for v in values):
    raise InvalidPermutationException(f"values must be integers: {list(values)}")
  if sorted(values) != list(range(1, n + 1)):
    raise InvalidPermutationException(f"{list(values)} is not a permutation of 1..{n}")
  return Permutation(n, values)


def descents(p: Permutation) -> List[int]:
  """Positions i in [1, n-1] with pi_i > pi_{i+1}, 1-indexed."""
  return [i + 1 for i in range(p.n - 1) if p.values[i] > p.values[i + 1]]


def ascents(p: Permutation) -> List[int]:
  """Positions i in [1, n-1] with pi_i < pi_{i+1}, 1-indexed."""
  return [i + 1 for i in range(p.n - 1) if p.values[i] < p.values[i + 1]]


def weak_excedances(p: Permutation) -> int:
  """Number of positions i with pi_i >= i."""
  return sum(1 for i, v in enumerate(p.values, start=1) if v >= i)
