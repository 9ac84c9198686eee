"""ASCII and SVG drawings of arc diagrams, tableaux and dot diagrams.

Arc diagrams put vertices 1..n on a line with every arc drawn above it.  Grids
are drawn as staircases: each row label follows the row's last cell and each
column label sits under the column's last cell, so reading the labels along the
boundary from the top right to the bottom left gives 1..n.
"""

import logging
from typing import Dict, List, Tuple

from . import constants as c
from .enums import RenderFormat
from .linked_partition import Arc, LinkedPartition
from .permutation import Permutation
from .serialization import Serializable
from .tableau import Cell, DotDiagram, PermutationTableau, Shape


logger = logging.getLogger("ptab.render")
logger.setLevel(logging.INFO)


def _slot_width(n: int) -> int:
  return max(c.asciiCellWidth, len(str(n)) + 1)


def arc_levels(lp: LinkedPartition) -> Dict[Arc, int]:
  """Stacks arcs so that arcs sharing a level never touch, shorter arcs lower."""
  levels: Dict[Arc, int] = {}
  occupied: List[List[Arc]] = []
  for arc in sorted(lp.arcs, key=lambda a: (a[1] - a[0], a)):
    level = 0
    while level < len(occupied) and any(
      arc[0] <= other[1] and other[0] <= arc[1] for other in occupied[level]
    ):
      level += 1
    if level == len(occupied):
      occupied.append([])
    occupied[level].append(arc)
    levels[arc] = level
  return levels


def render_lp_ascii(lp: LinkedPartition) -> str:
  width = _slot_width(lp.n)
  levels = arc_levels(lp)
  height = max(levels.values(), default=-1) + 1
  lineWidth = lp.n * width
  canvas = [[" "] * lineWidth for _ in range(height)]

  def x(v: int) -> int:
    return (v - 1) * width

  # canvas[0] is the top level.
  for (i, j), level in levels.items():
    row = canvas[height - 1 - level]
    for col in range(x(i) + 1, x(j)):
      row[col] = "-"
    row[x(i)] = "+"
    row[x(j)] = "+"
  for (i, j), level in levels.items():
    for below in range(height - level, height):
      for col in (x(i), x(j)):
        if canvas[below][col] != "+":
          canvas[below][col] = "|"

  lines = ["".join(row).rstrip() for row in canvas]
  lines.append("".join(f"{v:<{width}}" for v in range(1, lp.n + 1)).rstrip())
  caption = " ".join(f"({i},{j})" for i, j in lp.arcs) if lp.arcs else "none"
  lines.append(f"arcs: {caption}")
  return "\n".join(lines) + "\n"


def render_lp_svg(lp: LinkedPartition) -> str:
  cell = c.svgCellSize
  margin = c.svgMargin
  longest = max((j - i for i, j in lp.arcs), default=0)
  baseline = margin + longest * cell // 2
  width = 2 * margin + (lp.n - 1) * cell
  height = baseline + margin + cell

  def x(v: int) -> int:
    return margin + (v - 1) * cell

  parts = [
    f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
    f'viewBox="0 0 {width} {height}">'
  ]
  for i, j in lp.arcs:
    radius = (j - i) * cell // 2
    parts.append(
      f'<path d="M {x(i)} {baseline} A {radius} {radius} 0 0 1 {x(j)} {baseline}" '
      f'fill="none" stroke="black"/>'
    )
  for v in range(1, lp.n + 1):
    parts.append(f'<circle cx="{x(v)}" cy="{baseline}" r="3" fill="black"/>')
    parts.append(f'<text x="{x(v)}" y="{baseline + cell}" text-anchor="middle">{v}</text>')
  parts.append("</svg>")
  return "\n".join(parts) + "\n"


def _last_row_of_columns(shape: Shape) -> Dict[int, List[int]]:
  """Maps each row label to the columns whose last cell lies in that row."""
  lastRows: Dict[int, List[int]] = {}
  for col in shape.geometric_columns():
    last = max(row for row in shape.rows if row < col)
    lastRows.setdefault(last, []).append(col)
  return lastRows


def render_grid_ascii(shape: Shape, entries: Dict[Cell, str]) -> str:
  width = _slot_width(shape.n)
  columnIndex = shape.column_index()
  lastRows = _last_row_of_columns(shape)
  lines = []
  for row in shape.rows:
    cells = "".join(f"{entries[cell]:^{width}}" for cell in shape.row_cells(row))
    lines.append(f"{cells}{row:^{width}}".rstrip())
    ending = lastRows.get(row, [])
    if ending:
      labels = [" " * width] * (max(columnIndex[col] for col in ending) + 1)
      for col in ending:
        labels[columnIndex[col]] = f"{col:^{width}}"
      lines.append("".join(labels).rstrip())
  return "\n".join(lines) + "\n"


def render_tableau_ascii(t: PermutationTableau) -> str:
  return render_grid_ascii(t.shape, {cell: str(t.cell(cell)) for cell in t.shape.cells()})


def render_dots_ascii(d: DotDiagram) -> str:
  dots = set(d.dots)
  return render_grid_ascii(d.shape, {cell: "*" if cell in dots else "." for cell in d.shape.cells()})


def render_grid_svg(shape: Shape, entries: Dict[Cell, str]) -> str:
  cell = c.svgCellSize
  margin = c.svgMargin
  rowIndex = shape.row_index()
  columnIndex = shape.column_index()
  width = 2 * margin + (len(shape.columns) + 1) * cell
  height = 2 * margin + (len(shape.rows) + 1) * cell

  def corner(position: Tuple[int, int]) -> Tuple[int, int]:
    rowIdx, colIdx = position
    return margin + colIdx * cell, margin + rowIdx * cell

  parts = [
    f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
    f'viewBox="0 0 {width} {height}">'
  ]
  for row, col in shape.cells():
    left, top = corner((rowIndex[row], columnIndex[col]))
    parts.append(f'<rect x="{left}" y="{top}" width="{cell}" height="{cell}" fill="none" stroke="black"/>')
    entry = entries[(row, col)]
    if entry == "*":
      parts.append(f'<circle cx="{left + cell // 2}" cy="{top + cell // 2}" r="{cell // 4}" fill="black"/>')
    elif entry != ".":
      parts.append(
        f'<text x="{left + cell // 2}" y="{top + cell * 3 // 4}" text-anchor="middle">{entry}</text>'
      )
  for row in shape.rows:
    left, top = corner((rowIndex[row], shape.row_length(row)))
    parts.append(
      f'<text x="{left + cell // 2}" y="{top + cell * 3 // 4}" text-anchor="middle" '
      f'fill="gray">{row}</text>'
    )
  for last, columns in _last_row_of_columns(shape).items():
    for col in columns:
      left, top = corner((rowIndex[last] + 1, columnIndex[col]))
      parts.append(
        f'<text x="{left + cell // 2}" y="{top + cell * 3 // 4}" text-anchor="middle" '
        f'fill="gray">{col}</text>'
      )
  parts.append("</svg>")
  return "\n".join(parts) + "\n"


def render(obj: Serializable, fmt: RenderFormat) -> str:
  """Renders a linked partition, tableau or dot diagram.

  Raises:
    ValueError for objects without a drawing (permutations and bare shapes).
  """
  if isinstance(obj, LinkedPartition):
    return render_lp_ascii(obj) if fmt == RenderFormat.Ascii else render_lp_svg(obj)
  if isinstance(obj, PermutationTableau):
    if fmt == RenderFormat.Ascii:
      return render_tableau_ascii(obj)
    return render_grid_svg(obj.shape, {cell: str(obj.cell(cell)) for cell in obj.shape.cells()})
  if isinstance(obj, DotDiagram):
    if fmt == RenderFormat.Ascii:
      return render_dots_ascii(obj)
    dots = set(obj.dots)
    return render_grid_svg(obj.shape, {cell: "*" if cell in dots else "." for cell in obj.shape.cells()})
  kind = "permutation" if isinstance(obj, Permutation) else type(obj).__name__
  raise ValueError(f"render supports linked partitions, tableaux and dot diagrams, not a {kind}")
