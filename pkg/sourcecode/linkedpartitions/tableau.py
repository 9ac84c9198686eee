"""Ferrers shapes, permutation tableaux and their dot diagrams.

Conventions shared by every module:
  * The boundary of a shape of length n is labeled 1..n from the top-right
    corner to the bottom-left corner.  Row labels are the vertical steps,
    column labels the horizontal ones.
  * Cells are addressed by (row label, column label) and exist iff row < column.
  * Rows run top to bottom in increasing label order; columns run left to right
    in DECREASING label order.  A row's cells are therefore a prefix of the
    geometric column order, and fillings are stored row by row, left to right.

Grids are numpy int8 arrays of shape (#rows, #columns) in geometric order, with
cells outside the shape held at 0 and marked False in the companion mask.
"""

from dataclasses import dataclass
import logging
from typing import Dict, Iterable, List, Sequence, Tuple

from . import constants as c

import numpy as np


logger = logging.getLogger("ptab.tableau")
logger.setLevel(logging.INFO)

Cell = Tuple[int, int]


class InvalidTableauException(ValueError):
  """Raised when a shape, filling or dot set does not form a permutation tableau."""


class InvalidShapeException(InvalidTableauException):
  pass


class EmptyColumnException(InvalidTableauException):
  """A column contains no 1."""

  def __init__(self, column: int):
    self.column = column
    super().__init__(f"column {column} contains no 1")


class ForbiddenZeroException(InvalidTableauException):
  """A 0 has a 1 above it in its column and a 1 to its left in its row."""

  def __init__(self, cell: Cell):
    self.cell = cell
    super().__init__(f"cell {cell} holds a 0 with a 1 above it and a 1 to its left")


class InconsistentDotsException(InvalidTableauException):
  """A dot set is not the topmost 1's and rightmost restricted 0's of any tableau."""


@dataclass(frozen=True)
class Shape:
  """A Ferrers shape with empty rows allowed, given as a split of [n]."""

  n: int
  rows: Tuple[int, ...]
  columns: Tuple[int, ...]

  def geometric_columns(self) -> Tuple[int, ...]:
    """Column labels left to right, i.e. decreasing."""
    return tuple(reversed(self.columns))

  def row_length(self, row: int) -> int:
    return sum(1 for col in self.columns if col > row)

  def row_lengths(self) -> Tuple[int, ...]:
    return tuple(self.row_length(row) for row in self.rows)

  def direction_word(self) -> str:
    rowSet = set(self.rows)
    return "".join(c.verticalStep if v in rowSet else c.horizontalStep for v in range(1, self.n + 1))

  def has_cell(self, cell: Cell) -> bool:
    row, col = cell
    return row in self.rows and col in self.columns and row < col

  def row_cells(self, row: int) -> Tuple[Cell, ...]:
    return tuple((row, col) for col in self.geometric_columns()[: self.row_length(row)])

  def cells(self) -> Tuple[Cell, ...]:
    """All cells, rows top to bottom, each row left to right."""
    return tuple(cell for row in self.rows for cell in self.row_cells(row))

  def mask(self) -> np.ndarray:
    lengths = np.array(self.row_lengths(), dtype=np.int64)
    return np.arange(len(self.columns))[np.newaxis, :] < lengths[:, np.newaxis]

  def row_index(self) -> Dict[int, int]:
    return {row: idx for idx, row in enumerate(self.rows)}

  def column_index(self) -> Dict[int, int]:
    """Maps a column label to its geometric position (0 = leftmost)."""
    return {col: idx for idx, col in enumerate(self.geometric_columns())}


@dataclass(frozen=True)
class PermutationTableau:
  shape: Shape
  filling: Tuple[Tuple[int, ...], ...]

  def cell(self, cell: Cell) -> int:
    row, col = cell
    assert self.shape.has_cell(cell), f"{cell} is not a cell of the shape"
    return self.filling[self.shape.row_index()[row]][self.shape.column_index()[col]]

  def grid(self) -> np.ndarray:
    return _grid_from_filling(self.shape, self.filling)


@dataclass(frozen=True)
class DotDiagram:
  """Topmost 1's and rightmost restricted 0's of a tableau, sorted by (row, column)."""

  shape: Shape
  dots: Tuple[Cell, ...]

  def column_rows(self) -> Dict[int, List[int]]:
    """Maps each column label to the sorted rows of its dots."""
    rowsByColumn: Dict[int, List[int]] = {col: [] for col in self.shape.columns}
    for row, col in self.dots:
      rowsByColumn[col].append(row)
    return rowsByColumn

  def topmost_ones(self) -> Tuple[Cell, ...]:
    return tuple(
      sorted((rows[0], col) for col, rows in self.column_rows().items() if rows)
    )

  def restricted_zeros(self) -> Tuple[Cell, ...]:
    topmost = set(self.topmost_ones())
    return tuple(cell for cell in self.dots if cell not in topmost)

  def restricted_zero_rows(self) -> Tuple[int, ...]:
    return tuple(sorted({row for row, _ in self.restricted_zeros()}))

  def empty_rows(self) -> Tuple[int, ...]:
    """Rows holding neither a topmost 1 nor a restricted 0."""
    occupied = {row for row, _ in self.dots}
    return tuple(row for row in self.shape.rows if row not in occupied)


def make_shape(n: int, columns: Iterable[int]) -> Shape:
  """Builds the shape of length n whose horizontal steps are `columns`.

  Raises:
    InvalidShapeException if n < 1, a label lies outside [n], or 1 is a column.
  """
  if isinstance(n, bool) or not isinstance(n, int) or n < 1:
    raise InvalidShapeException(f"tableau length must be a positive integer, got {n!r}")
  columnList = list(columns)
  for col in columnList:
    if isinstance(col, bool) or not isinstance(col, int) or not (1 <= col <= n):
      raise InvalidShapeException(f"column label {col!r} is not an integer in [{n}]")
  columnSet = set(columnList)
  if len(columnSet) != len(columnList):
    raise InvalidShapeException(f"repeated column labels in {columnList}")
  if 1 in columnSet:
    raise InvalidShapeException("label 1 must be a row: the boundary starts with a vertical step")
  rows = tuple(v for v in range(1, n + 1) if v not in columnSet)
  return Shape(n, rows, tuple(sorted(columnSet)))


def _grid_from_filling(shape: Shape, filling: Sequence[Sequence[int]]) -> np.ndarray:
  grid = np.zeros((len(shape.rows), len(shape.columns)), dtype=np.int8)
  for idx, bits in enumerate(filling):
    grid[idx, : len(bits)] = bits
  return grid


def _filling_from_grid(shape: Shape, grid: np.ndarray) -> Tuple[Tuple[int, ...], ...]:
  return tuple(
    tuple(int(bit) for bit in grid[idx, :length]) for idx, length in enumerate(shape.row_lengths())
  )


def _exclusive_running_max(grid: np.ndarray, axis: int) -> np.ndarray:
  """For each cell, whether some earlier cell along `axis` holds a 1."""
  running = np.maximum.accumulate(grid, axis=axis)
  shifted = np.zeros_like(grid)
  if axis == 0:
    shifted[1:, :] = running[:-1, :]
  else:
    shifted[:, 1:] = running[:, :-1]
  return shifted.astype(bool)


def validate_tableau(shape: Shape, filling: Sequence[Sequence[int]]) -> PermutationTableau:
  """Checks both tableau rules and returns the tableau.

  Args:
    shape: the Ferrers shape.
    filling: one list per row (increasing row label), cells left to right.

  Raises:
    InvalidTableauException if the filling does not match the shape or is not 0/1.
    EmptyColumnException naming the leftmost column without a 1.
    ForbiddenZeroException naming the first offending cell in reading order.
  """
  if len(filling) != len(shape.rows):
    raise InvalidTableauException(f"expected {len(shape.rows)} rows, got {len(filling)}")
  normalized: List[Tuple[int, ...]] = []
  for row, length, bits in zip(shape.rows, shape.row_lengths(), filling):
    bits = tuple(bits)
    if len(bits) != length:
      raise InvalidTableauException(f"row {row} has {length} cells, got {len(bits)} entries")
    if any(isinstance(bit, bool) or bit not in (0, 1) for bit in bits):
      raise InvalidTableauException(f"row {row} holds entries other than 0 and 1: {list(bits)}")
    normalized.append(bits)
  grid = _grid_from_filling(shape, normalized)
  mask = shape.mask()
  geometric = shape.geometric_columns()
  columnHasOne = grid.any(axis=0)
  for idx, col in enumerate(geometric):
    if not columnHasOne[idx]:
      raise EmptyColumnException(col)
  forbidden = (
    mask & (grid == 0) & _exclusive_running_max(grid, axis=0) & _exclusive_running_max(grid, axis=1)
  )
  offending = np.argwhere(forbidden)
  if len(offending):
    rowIdx, colIdx = offending[0]
    raise ForbiddenZeroException((shape.rows[rowIdx], geometric[colIdx]))
  return PermutationTableau(shape, tuple(normalized))


def dots_of(t: PermutationTableau) -> DotDiagram:
  """Topmost 1 of every column plus the rightmost restricted 0 of every row.

  "Rightmost" is geometric: among a row's restricted 0's, the one in the column
  with the smallest label.
  """
  shape = t.shape
  grid = t.grid()
  geometric = shape.geometric_columns()
  dots: List[Cell] = []
  for idx, col in enumerate(geometric):
    ones = np.flatnonzero(grid[:, idx])
    assert len(ones), f"column {col} has no 1"
    dots.append((shape.rows[ones[0]], col))
  restricted = shape.mask() & (grid == 0) & _exclusive_running_max(grid, axis=0)
  for rowIdx, row in enumerate(shape.rows):
    positions = np.flatnonzero(restricted[rowIdx])
    if len(positions):
      dots.append((row, geometric[positions.max()]))
  return DotDiagram(shape, tuple(sorted(dots)))


def make_dot_diagram(shape: Shape, dots: Iterable[Sequence[int]]) -> DotDiagram:
  """Builds a DotDiagram after checking the structural dot rules.

  Raises:
    InconsistentDotsException if a dot lies outside the shape, a column has no
    dot, or a row holds more than one dot below the topmost dot of its column.
  """
  cells = set()
  for raw in dots:
    if len(raw) != 2:
      raise InconsistentDotsException(f"dot {tuple(raw)} is not a (row, column) pair")
    cell = (raw[0], raw[1])
    if any(isinstance(v, bool) or not isinstance(v, int) for v in cell):
      raise InconsistentDotsException(f"dot {cell} has non-integer coordinates")
    if not shape.has_cell(cell):
      raise InconsistentDotsException(f"dot {cell} is not a cell of the shape")
    cells.add(cell)
  diagram = DotDiagram(shape, tuple(sorted(cells)))
  for col, rows in diagram.column_rows().items():
    if not rows:
      raise InconsistentDotsException(f"column {col} has no dot")
  seen: Dict[int, Cell] = {}
  for cell in diagram.restricted_zeros():
    if cell[0] in seen:
      raise InconsistentDotsException(
        f"row {cell[0]} holds two restricted 0 dots: {seen[cell[0]]} and {cell}"
      )
    seen[cell[0]] = cell
  return diagram


def tableau_from_dots(d: DotDiagram) -> PermutationTableau:
  """Reconstructs the unique tableau whose dot diagram is d.

  Cells above a topmost 1 and cells left of a rightmost restricted 0 hold 0, the
  restricted 0 itself holds 0, and every other cell holds 1.

  Raises:
    InconsistentDotsException if no tableau has exactly these dots.
  """
  shape = d.shape
  d = make_dot_diagram(shape, d.dots)
  rowIndex = shape.row_index()
  columnIndex = shape.column_index()
  grid = shape.mask().astype(np.int8)
  topmost = d.topmost_ones()
  for row, col in topmost:
    grid[: rowIndex[row], columnIndex[col]] = 0
  for row, col in d.restricted_zeros():
    grid[rowIndex[row], : columnIndex[col] + 1] = 0
  for row, col in topmost:
    grid[rowIndex[row], columnIndex[col]] = 1
  try:
    tableau = validate_tableau(shape, _filling_from_grid(shape, grid))
  except InvalidTableauException as e:
    raise InconsistentDotsException(f"dots do not reconstruct a valid tableau: {e}") from e
  recovered = dots_of(tableau)
  if recovered.dots != d.dots:
    raise InconsistentDotsException(
      f"reconstruction has dots {list(recovered.dots)}, expected {list(d.dots)}"
    )
  return tableau
