import argparse
from itertools import islice
import logging
import sys
from typing import Callable, Dict, List, Optional, TextIO, Tuple

from . import constants as c
from .bijections import (
  lp_to_perm,
  lp_to_tableau,
  perm_to_lp,
  perm_to_tableau,
  shape_of,
  tableau_to_lp,
  tableau_to_perm,
)
from .enumeration import StreamFilter, counts_by_size, distribution, enum_objects, statistic_function
from .enums import (
  Filter,
  MapName,
  ObjectKind,
  RenderFormat,
  Suite,
  enum_values,
  filters_from_csv,
  from_value,
)
from .render import render
from .serialization import dumps, parse_any, parse_line, to_json
from .tableau import dots_of
from .verification import run_suite

import pandas as pd


logger = logging.getLogger("ptab.runner")
logger.setLevel(logging.INFO)

_maps: Dict[MapName, Tuple[ObjectKind, Callable]] = {
  MapName.LpToPerm: (ObjectKind.LinkedPartition, lp_to_perm),
  MapName.PermToLp: (ObjectKind.Permutation, perm_to_lp),
  MapName.LpToTableau: (ObjectKind.LinkedPartition, lp_to_tableau),
  MapName.TableauToLp: (ObjectKind.Tableau, tableau_to_lp),
  MapName.LpToShape: (ObjectKind.LinkedPartition, shape_of),
  MapName.TableauToDots: (ObjectKind.Tableau, dots_of),
  MapName.PermToTableau: (ObjectKind.Permutation, perm_to_tableau),
  MapName.TableauToPerm: (ObjectKind.Tableau, tableau_to_perm),
}


def _add_filter_args(parser: argparse.ArgumentParser) -> None:
  parser.add_argument(
    "--filter",
    default=[],
    action="append",
    type=filters_from_csv,
    help=f"CSV list of filters, repeatable. One of {enum_values(Filter)}.",
  )
  parser.add_argument("--blocks", default=None, type=int, help="keep linked partitions with K blocks")
  parser.add_argument("--noncrossing", action="store_true", help="same as --filter noncrossing")
  parser.add_argument("--nonnesting", action="store_true", help="same as --filter nonnesting")
  parser.add_argument(
    "--i2-avoiding", dest="i2_avoiding", action="store_true", help="same as --filter i2-avoiding"
  )
  parser.add_argument(
    "--j2-avoiding", dest="j2_avoiding", action="store_true", help="same as --filter j2-avoiding"
  )


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
  parser = argparse.ArgumentParser(
    "ptab", description="Linked partitions, permutations and permutation tableaux."
  )
  subparsers = parser.add_subparsers(dest="command", required=True)

  enumerateParser = subparsers.add_parser("enumerate", help="stream every object of a size as JSONL")
  enumerateParser.add_argument("--object", required=True, choices=enum_values(ObjectKind))
  enumerateParser.add_argument("--n", required=True, type=int, help="size of the objects")
  enumerateParser.add_argument("--limit", default=None, type=int, help="stop after this many lines")
  enumerateParser.add_argument("--format", default="jsonl", choices=["jsonl"])
  _add_filter_args(enumerateParser)

  mapParser = subparsers.add_parser("map", help="apply a bijection to every line of standard input")
  mapParser.add_argument("map_name", choices=enum_values(MapName))

  countParser = subparsers.add_parser("count", help="count objects, optionally by a statistic")
  countParser.add_argument("--object", required=True, choices=enum_values(ObjectKind))
  countParser.add_argument("--n", default=None, type=int, help="single size")
  countParser.add_argument("--n-min", dest="n_min", default=None, type=int)
  countParser.add_argument("--n-max", dest="n_max", default=None, type=int)
  countParser.add_argument("--by", default=None, help="statistic to tabulate")
  _add_filter_args(countParser)

  verifyParser = subparsers.add_parser("verify", help="run exhaustive verification suites")
  verifyParser.add_argument("--n-max", dest="n_max", required=True, type=int)
  verifyParser.add_argument("--suite", default=Suite.All.value, choices=enum_values(Suite))

  renderParser = subparsers.add_parser("render", help="draw one object read from standard input")
  renderParser.add_argument(
    "--format", default=RenderFormat.Ascii.value, choices=enum_values(RenderFormat)
  )
  return parser.parse_args(argv)


def _stream_filter(args: argparse.Namespace) -> StreamFilter:
  filters = set().union(*args.filter)
  for flag, name in (
    (args.noncrossing, Filter.Noncrossing),
    (args.nonnesting, Filter.Nonnesting),
    (args.i2_avoiding, Filter.I2Avoiding),
    (args.j2_avoiding, Filter.J2Avoiding),
  ):
    if flag:
      filters.add(name)
  return StreamFilter(blocks=args.blocks, filters=frozenset(filters))


def _cmd_enumerate(args: argparse.Namespace, stdin: TextIO, stdout: TextIO) -> int:
  kind = from_value(ObjectKind, args.object)
  streamFilter = _stream_filter(args)
  streamFilter.check_applicable(kind)
  if args.limit is not None and args.limit < 0:
    raise ValueError(f"--limit must be non-negative, got {args.limit}")
  stream = streamFilter.apply(enum_objects(kind, args.n))
  for obj in islice(stream, args.limit):
    stdout.write(to_json(obj) + "\n")
  return 0


def _cmd_map(args: argparse.Namespace, stdin: TextIO, stdout: TextIO) -> int:
  kind, transform = _maps[from_value(MapName, args.map_name)]
  for lineNumber, line in enumerate(stdin, start=1):
    if not line.strip():
      continue
    try:
      obj = parse_line(line, kind)
    except ValueError as e:
      logger.error(f"line {lineNumber}: {e}")
      return 2
    stdout.write(to_json(transform(obj)) + "\n")
  return 0


def _size_range(args: argparse.Namespace) -> range:
  if args.n is not None:
    if args.n_min is not None or args.n_max is not None:
      raise ValueError("use either --n or --n-min/--n-max")
    return range(args.n, args.n + 1)
  if args.n_min is None or args.n_max is None:
    raise ValueError("count needs --n or both --n-min and --n-max")
  if args.n_min > args.n_max:
    raise ValueError(f"--n-min {args.n_min} exceeds --n-max {args.n_max}")
  return range(args.n_min, args.n_max + 1)


def _cmd_count(args: argparse.Namespace, stdin: TextIO, stdout: TextIO) -> int:
  kind = from_value(ObjectKind, args.object)
  streamFilter = _stream_filter(args)
  streamFilter.check_applicable(kind)
  if args.by is not None:
    statistic_function(kind, args.by)
  sizes = _size_range(args)
  if args.by is None:
    totals = counts_by_size(kind, sizes, streamFilter.accepts)
    for n, total in totals.items():
      stdout.write(dumps({c.nKey: int(n), c.totalKey: int(total)}) + "\n")
  else:
    byN = {}
    for n in sizes:
      histogram = distribution(streamFilter.apply(enum_objects(kind, n)), args.by)
      logger.debug(f"n={n} by {args.by}:\n{histogram.as_series().to_string()}")
      byN[n] = histogram.total
      stdout.write(dumps({c.nKey: n, c.countsKey: histogram.as_json(), c.totalKey: histogram.total}) + "\n")
    totals = pd.Series(byN, dtype="int64")
  logger.info(f"totals by n:\n{totals.rename(c.totalKey).to_string()}")
  return 0


def _cmd_verify(args: argparse.Namespace, stdin: TextIO, stdout: TextIO) -> int:
  report = run_suite(from_value(Suite, args.suite), args.n_max)
  stdout.write(dumps(report.as_dict()) + "\n")
  return 0 if report.passed else 1


def _cmd_render(args: argparse.Namespace, stdin: TextIO, stdout: TextIO) -> int:
  lines = [line for line in stdin.read().splitlines() if line.strip()]
  if len(lines) != 1:
    raise ValueError(f"render reads exactly one JSON object, got {len(lines)} lines")
  stdout.write(render(parse_any(lines[0]), from_value(RenderFormat, args.format)))
  return 0


_commands: Dict[str, Callable[[argparse.Namespace, TextIO, TextIO], int]] = {
  "enumerate": _cmd_enumerate,
  "map": _cmd_map,
  "count": _cmd_count,
  "verify": _cmd_verify,
  "render": _cmd_render,
}


def main(
  argv: Optional[List[str]] = None,
  stdin: Optional[TextIO] = None,
  stdout: Optional[TextIO] = None,
) -> int:
  """Runs one command and returns the process exit code.

  0 on success, 1 when verification fails, 2 on usage or input errors.  argparse
  exits with 2 on its own for unknown flags and choices.
  """
  args = parse_args(argv)
  stdin = sys.stdin if stdin is None else stdin
  stdout = sys.stdout if stdout is None else stdout
  logger.debug(f"ptab python version: {sys.version}")
  logger.debug(f"ptab pandas version: {pd.__version__}")
  try:
    return _commands[args.command](args, stdin, stdout)
  except ValueError as e:
    logger.error(f"{args.command}: {e}")
    return 2


if __name__ == "__main__":
  sys.exit(main())
