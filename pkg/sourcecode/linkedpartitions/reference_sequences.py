"""Vendored integer sequences the enumeration is checked against."""

from functools import cache
import logging
from typing import Tuple

from . import constants as c


logger = logging.getLogger("ptab.reference_sequences")
logger.setLevel(logging.INFO)


class IndexOutOfRangeException(ValueError):
  pass


def _check_index(name: str, value: int, low: int, high: float) -> None:
  if isinstance(value, bool) or not isinstance(value, int) or not (low <= value <= high):
    raise IndexOutOfRangeException(f"{name}={value!r} is outside [{low}, {high}]")


@cache
def eulerian(n: int, j: int) -> int:
  """Number of permutations of [n] with exactly j descents.

  E(1, 0) = 1 and E(n, j) = (j + 1) E(n-1, j) + (n - j) E(n-1, j-1).

  Raises:
    IndexOutOfRangeException unless n >= 1 and 0 <= j <= n - 1.
  """
  _check_index("n", n, 1, float("inf"))
  _check_index("j", j, 0, n - 1)
  if n == 1:
    return 1
  total = 0
  if j <= n - 2:
    total += (j + 1) * eulerian(n - 1, j)
  if j >= 1:
    total += (n - j) * eulerian(n - 1, j - 1)
  return total


def eulerian_row(n: int) -> Tuple[int, ...]:
  return tuple(eulerian(n, j) for j in range(n))


def schroeder(m: int) -> int:
  """The m-th large Schroeder number, schroeder(0) = 1.

  Values past the vendored table follow
  (m + 1) S(m) = 3 (2m - 1) S(m - 1) - (m - 2) S(m - 2).

  Raises:
    IndexOutOfRangeException if m < 0.
  """
  _check_index("m", m, 0, float("inf"))
  if m < len(c.schroederTable):
    return c.schroederTable[m]
  previous, current = c.schroederTable[-2], c.schroederTable[-1]
  for k in range(len(c.schroederTable), m + 1):
    previous, current = current, (3 * (2 * k - 1) * current - (k - 2) * previous) // (k + 1)
  return current
