from contextlib import contextmanager
import logging
import os
import time
from typing import Tuple


logger = logging.getLogger("ptab.constants")
logger.setLevel(logging.INFO)


# Parallelism for verify.  Shards are rank ranges of the enumeration streams, so
# every worker is a pure function of its range and results merge by addition.
threadsEnvVar = "PTAB_THREADS"
defaultThreads = 1
# Minimum number of objects in a shard; smaller streams are not split.
minShardSize = 512

# Size guards.  Suites over L(n) and P(n) are factorial in n; the tableau oracle
# enumerates raw 0/1 fillings and is exponential in the number of cells.
maxFactorialN = 8
maxOracleN = 7
maxPatternN = 7

# Canonical JSON.  Keys are emitted in the insertion order of the dicts built by
# serialization, with no whitespace.
jsonSeparators: Tuple[str, str] = (",", ":")

# Canonical JSON keys
nKey = "n"
arcsKey = "arcs"
valuesKey = "values"
columnsKey = "columns"
fillingKey = "filling"
dotsKey = "dots"
countsKey = "counts"
totalKey = "total"

# Large Schroeder numbers S(0..10), OEIS A006318.  Larger indices use the
# two-term recurrence in reference_sequences.
schroederTable: Tuple[int, ...] = (
  1,
  2,
  6,
  22,
  90,
  394,
  1806,
  8558,
  41586,
  206098,
  1037718,
)

# Rendering
svgCellSize = 20
svgMargin = 20
asciiCellWidth = 3

# Shape direction letters: rows are vertical boundary steps, columns horizontal.
verticalStep = "V"
horizontalStep = "H"


def get_thread_count() -> int:
  """Returns the verify worker cap from PTAB_THREADS (default 1).

  Raises:
    ValueError if the variable is set to anything but a positive integer.
  """
  raw = os.environ.get(threadsEnvVar)
  if raw is None or raw.strip() == "":
    return defaultThreads
  try:
    threads = int(raw)
  except ValueError:
    raise ValueError(f"{threadsEnvVar} must be a positive integer, got {raw!r}")
  if threads < 1:
    raise ValueError(f"{threadsEnvVar} must be a positive integer, got {raw!r}")
  return threads


@contextmanager
def time_block(label):
  start = time.time()
  try:
    yield
  finally:
    end = time.time()
    logger.info(f"{label} elapsed time: {end - start:.2f} secs ({((end - start) / 60.0):.2f} mins)")
