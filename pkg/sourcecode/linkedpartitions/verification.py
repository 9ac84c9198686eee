"""Exhaustive verification suites.

Each VerificationCheck covers one property for every size n in 1..min(nMax, its
guard).  Checks over L(n) and P(n) run over rank ranges: a shard is a pure
function of (check, n, start, stop), and shard results merge by adding tallies
and keeping the counterexample with the smallest rank.  Shards fan out to a
process pool when PTAB_THREADS allows more than one worker; results are merged
in rank order before anything is printed.
"""

from abc import ABC, abstractmethod
from collections import namedtuple
import concurrent.futures
from dataclasses import dataclass, field
from enum import Enum
from functools import cache, reduce
import logging
from math import factorial
import multiprocessing
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

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
from .enumeration import (
  Histogram,
  distribution,
  enum_linked_partitions,
  enum_objects,
  enum_tableaux_bruteforce,
  unrank_linked_partition,
  unrank_permutation,
)
from .enums import ObjectKind, PatternKind, RecordStatus, Statistic, Suite
from .linked_partition import LinkedPartition, block_count, blocks_of, classify_vertices, from_blocks
from .patterns import find_pattern, is_noncrossing, is_nonnesting, pattern_witnesses
from .permutation import Permutation, descents, weak_excedances
from .reference_sequences import eulerian_row, schroeder
from .serialization import dumps, to_json
from .tableau import PermutationTableau, dots_of, tableau_from_dots

import pandas as pd


logger = logging.getLogger("ptab.verification")
logger.setLevel(logging.INFO)

CheckAndSuite = namedtuple("CheckAndSuite", ["checkName", "suite"])
"""namedtuple naming a VerificationCheck and the suite it belongs to."""


class CheckID(Enum):
  """Each CheckID has a unique checkName and is assigned to exactly one VerificationCheck."""

  # roundtrip
  LP_PERM_ROUNDTRIP = CheckAndSuite("LpPermRoundtrip", Suite.Roundtrip)
  PERM_LP_ROUNDTRIP = CheckAndSuite("PermLpRoundtrip", Suite.Roundtrip)
  LP_TABLEAU_ROUNDTRIP = CheckAndSuite("LpTableauRoundtrip", Suite.Roundtrip)
  DOTS_RECONSTRUCTION = CheckAndSuite("DotsReconstruction", Suite.Roundtrip)
  BLOCKS_ROUNDTRIP = CheckAndSuite("BlocksRoundtrip", Suite.Roundtrip)
  PERM_TABLEAU_ROUNDTRIP = CheckAndSuite("PermTableauRoundtrip", Suite.Roundtrip)

  # distribution
  EULERIAN_DESCENT_CENSUS = CheckAndSuite("EulerianDescentCensus", Suite.Distribution)
  BLOCKS_EULERIAN = CheckAndSuite("BlocksEulerian", Suite.Distribution)
  DESCENT_TRANSPORT = CheckAndSuite("DescentTransport", Suite.Distribution)
  ROWS_WEAK_EXCEDANCES = CheckAndSuite("RowsWeakExcedances", Suite.Distribution)
  COLUMNS_DESCENTS = CheckAndSuite("ColumnsDescents", Suite.Distribution)

  # tableau-oracle
  ORACLE_COUNT = CheckAndSuite("OracleCount", Suite.TableauOracle)
  ORACLE_IMAGE = CheckAndSuite("OracleImage", Suite.TableauOracle)
  ORACLE_ROUNDTRIP = CheckAndSuite("OracleRoundtrip", Suite.TableauOracle)
  ORACLE_ROWS_EULERIAN = CheckAndSuite("OracleRowsEulerian", Suite.TableauOracle)

  # corollaries
  BLOCK_MINIMA = CheckAndSuite("BlockMinima", Suite.Corollaries)
  ARCS_DOTS = CheckAndSuite("ArcsEqualDots", Suite.Corollaries)
  TRANSIENTS_RESTRICTED_ZEROS = CheckAndSuite("TransientsRestrictedZeros", Suite.Corollaries)
  SINGLETONS_EMPTY_ROWS = CheckAndSuite("SingletonsEmptyRows", Suite.Corollaries)

  # patterns
  PATTERN_SEARCH = CheckAndSuite("PatternSearchBruteForce", Suite.Patterns)
  NONCROSSING_J2 = CheckAndSuite("NoncrossingJ2Avoiding", Suite.Patterns)
  NONNESTING_I2 = CheckAndSuite("NonnestingI2Avoiding", Suite.Patterns)
  SCHROEDER_NONCROSSING = CheckAndSuite("SchroederNoncrossing", Suite.Patterns)
  SCHROEDER_NONNESTING = CheckAndSuite("SchroederNonnesting", Suite.Patterns)
  SCHROEDER_J2_ORACLE = CheckAndSuite("SchroederJ2AvoidingTableaux", Suite.Patterns)
  SCHROEDER_I2_ORACLE = CheckAndSuite("SchroederI2AvoidingTableaux", Suite.Patterns)

  def get_name(self) -> str:
    return self.value.checkName

  def get_suite(self) -> Suite:
    return self.value.suite


@dataclass
class ShardResult:
  """Partial outcome of one check over one rank range of one size."""

  checked: int = 0
  failures: int = 0
  counterexample: Optional[str] = None
  counterexampleRank: Optional[int] = None
  tallies: Dict[str, Histogram] = field(default_factory=dict)
  summary: Any = None

  def merge(self, other: "ShardResult") -> "ShardResult":
    tallies = dict(self.tallies)
    for name, histogram in other.tallies.items():
      tallies[name] = tallies[name].merge(histogram) if name in tallies else histogram
    first = self
    if other.counterexample is not None and (
      self.counterexample is None or other.counterexampleRank < self.counterexampleRank
    ):
      first = other
    return ShardResult(
      checked=self.checked + other.checked,
      failures=self.failures + other.failures,
      counterexample=first.counterexample,
      counterexampleRank=first.counterexampleRank,
      tallies=tallies,
      summary=self.summary if self.summary is not None else other.summary,
    )


@dataclass
class Outcome:
  """Per-size conclusion of a check: a summary value and, on failure, a counterexample."""

  summary: Any
  counterexample: Optional[str] = None


@dataclass
class CheckRecord:
  name: str
  suite: str
  nMin: int
  nMax: int
  status: RecordStatus
  checked: int
  summary: Dict[int, Any]
  counterexample: Optional[str] = None
  counterexampleN: Optional[int] = None

  def as_dict(self) -> Dict[str, Any]:
    return {
      "name": self.name,
      "suite": self.suite,
      "nMin": self.nMin,
      "nMax": self.nMax,
      "status": self.status.value,
      "checked": self.checked,
      "summary": {str(n): value for n, value in self.summary.items()},
      "counterexample": self.counterexample,
      "counterexampleN": self.counterexampleN,
    }


@dataclass
class VerifyReport:
  suite: str
  records: List[CheckRecord]
  durationSeconds: float

  @property
  def passed(self) -> bool:
    return all(record.status != RecordStatus.Fail for record in self.records)

  def as_dict(self) -> Dict[str, Any]:
    return {
      "suite": self.suite,
      "status": (RecordStatus.Pass if self.passed else RecordStatus.Fail).value,
      "durationSeconds": round(self.durationSeconds, 3),
      "records": [record.as_dict() for record in self.records],
    }

  def as_frame(self) -> pd.DataFrame:
    return pd.DataFrame(
      [
        {
          "check": record.name,
          "suite": record.suite,
          "n": f"{record.nMin}..{record.nMax}",
          "status": record.status.value,
          "checked": record.checked,
        }
        for record in self.records
      ],
      columns=["check", "suite", "n", "status", "checked"],
    )


class VerificationCheck(ABC):
  """One exhaustively checked property.

  Each check has a CheckID, a size guard and an observed flag.  Observed checks
  record what they measure, including the first disagreement, without failing
  the report.
  """

  def __init__(self, checkID: CheckID, maxN: int = c.maxFactorialN, observed: bool = False):
    self._checkID = checkID
    self._maxN = maxN
    self._observed = observed

  def get_check_id(self) -> CheckID:
    return self._checkID

  def get_name(self) -> str:
    return self._checkID.get_name()

  def get_max_n(self) -> int:
    return self._maxN

  def is_observed(self) -> bool:
    return self._observed

  def stream_size(self, n: int) -> Optional[int]:
    """Number of rank-addressable objects at size n, or None if the check runs as a single shard."""
    return factorial(n)

  @abstractmethod
  def run_shard(self, n: int, start: int, stop: Optional[int]) -> ShardResult:
    """Evaluates the check over ranks [start, stop) of size n."""

  @abstractmethod
  def conclude(self, n: int, result: ShardResult) -> Outcome:
    """Turns the merged shard results of size n into a summary and an optional counterexample."""


class PointwiseCheck(VerificationCheck):
  """Applies inspect to every object of a family; inspect returns None or a failure description."""

  def __init__(
    self,
    checkID: CheckID,
    kind: ObjectKind,
    inspect: Callable[[Any], Optional[str]],
    maxN: int = c.maxFactorialN,
    observed: bool = False,
  ):
    super().__init__(checkID, maxN, observed)
    self._kind = kind
    self._inspect = inspect

  def run_shard(self, n: int, start: int, stop: Optional[int]) -> ShardResult:
    result = ShardResult()
    for rank, obj in enumerate(enum_objects(self._kind, n, start, stop), start=start):
      result.checked += 1
      try:
        problem = self._inspect(obj)
      except (AssertionError, ValueError) as e:
        problem = f"{type(e).__name__}: {e}"
      if problem is None:
        continue
      result.failures += 1
      if result.counterexample is None:
        result.counterexample = f"{to_json(obj)} {problem}"
        result.counterexampleRank = rank
    return result

  def conclude(self, n: int, result: ShardResult) -> Outcome:
    if self._observed:
      return Outcome({"checked": result.checked, "disagreements": result.failures}, result.counterexample)
    return Outcome(result.checked, result.counterexample)


class CensusCheck(VerificationCheck):
  """Tallies per-rank statistics into histograms and compares them once per size.

  tallies maps a name to (family, statistic function); the linked partition and
  the permutation of equal rank are visited together.  evaluate receives the
  merged histograms and returns (summary, mismatch description or None).
  """

  def __init__(
    self,
    checkID: CheckID,
    tallies: Dict[str, Tuple[ObjectKind, Callable[[Any], int]]],
    evaluate: Callable[[int, Dict[str, Histogram]], Tuple[Any, Optional[str]]],
    maxN: int = c.maxFactorialN,
  ):
    super().__init__(checkID, maxN)
    self._tallies = tallies
    self._evaluate = evaluate

  def run_shard(self, n: int, start: int, stop: Optional[int]) -> ShardResult:
    kinds = {kind for kind, _ in self._tallies.values()}
    counts: Dict[str, Dict[int, int]] = {name: {} for name in self._tallies}
    ranks = range(start, factorial(n) if stop is None else min(stop, factorial(n)))
    for rank in ranks:
      objects = {}
      if ObjectKind.LinkedPartition in kinds:
        objects[ObjectKind.LinkedPartition] = unrank_linked_partition(n, rank)
      if ObjectKind.Permutation in kinds:
        objects[ObjectKind.Permutation] = unrank_permutation(n, rank)
      for name, (kind, statistic) in self._tallies.items():
        value = statistic(objects[kind])
        counts[name][value] = counts[name].get(value, 0) + 1
    return ShardResult(
      checked=len(ranks),
      tallies={name: Histogram(tally, len(ranks)) for name, tally in counts.items()},
    )

  def conclude(self, n: int, result: ShardResult) -> Outcome:
    summary, mismatch = self._evaluate(n, result.tallies)
    return Outcome(summary, mismatch)


class WholeCheck(VerificationCheck):
  """Runs once per size; evaluate returns (objects checked, summary, counterexample or None)."""

  def __init__(
    self,
    checkID: CheckID,
    evaluate: Callable[[int], Tuple[int, Any, Optional[str]]],
    maxN: int = c.maxOracleN,
    observed: bool = False,
  ):
    super().__init__(checkID, maxN, observed)
    self._evaluate = evaluate

  def stream_size(self, n: int) -> Optional[int]:
    return None

  def run_shard(self, n: int, start: int, stop: Optional[int]) -> ShardResult:
    checked, summary, counterexample = self._evaluate(n)
    return ShardResult(
      checked=checked,
      failures=0 if counterexample is None else 1,
      counterexample=counterexample,
      counterexampleRank=None if counterexample is None else 0,
      summary=summary,
    )

  def conclude(self, n: int, result: ShardResult) -> Outcome:
    return Outcome(result.summary, result.counterexample)


def _mismatch(expected: Dict[Any, Any], actual: Dict[Any, Any]) -> Optional[str]:
  if expected == actual:
    return None
  return dumps(
    {
      "expected": {str(k): v for k, v in expected.items()},
      "actual": {str(k): v for k, v in actual.items()},
    }
  )


# roundtrip inspections


def _lp_perm_roundtrip(lp: LinkedPartition) -> Optional[str]:
  p = lp_to_perm(lp)
  back = perm_to_lp(p)
  if back != lp:
    return f"maps to {p} which maps back to {to_json(back)}"
  return None


def _perm_lp_roundtrip(p: Permutation) -> Optional[str]:
  lp = perm_to_lp(p)
  back = lp_to_perm(lp)
  if back != p:
    return f"maps to {to_json(lp)} which maps back to {back}"
  return None


def _lp_tableau_roundtrip(lp: LinkedPartition) -> Optional[str]:
  t = lp_to_tableau(lp)
  if t.shape != shape_of(lp):
    return f"tableau shape {to_json(t.shape)} differs from {to_json(shape_of(lp))}"
  if len(t.shape.rows) != block_count(lp):
    return f"{len(t.shape.rows)} rows but {block_count(lp)} blocks"
  back = tableau_to_lp(t)
  if back != lp:
    return f"maps to {to_json(t)} which maps back to {to_json(back)}"
  return None


def _dots_reconstruction(lp: LinkedPartition) -> Optional[str]:
  t = lp_to_tableau(lp)
  rebuilt = tableau_from_dots(dots_of(t))
  if rebuilt != t:
    return f"dots of {to_json(t)} rebuild {to_json(rebuilt)}"
  return None


def _blocks_roundtrip(lp: LinkedPartition) -> Optional[str]:
  blocks = blocks_of(lp)
  back = from_blocks(lp.n, blocks)
  if back != lp:
    return f"blocks {blocks} rebuild {to_json(back)}"
  if blocks_of(back) != blocks:
    return f"blocks {blocks} come back as {blocks_of(back)}"
  return None


def _perm_tableau_roundtrip(p: Permutation) -> Optional[str]:
  t = perm_to_tableau(p)
  if len(t.shape.rows) != len(descents(p)) + 1:
    return f"{len(descents(p))} descents but {len(t.shape.rows)} rows"
  back = tableau_to_perm(t)
  if back != p:
    return f"maps to {to_json(t)} which maps back to {back}"
  return None


# distribution


def _descent_transport(lp: LinkedPartition) -> Optional[str]:
  p = lp_to_perm(lp)
  if len(descents(p)) != block_count(lp) - 1:
    return f"{block_count(lp)} blocks map to {p} with {len(descents(p))} descents"
  return None


def _eulerian_census(name: str, shift: int) -> Callable[[int, Dict[str, Histogram]], Tuple[Any, Optional[str]]]:
  def evaluate(n: int, tallies: Dict[str, Histogram]) -> Tuple[Any, Optional[str]]:
    expected = {j + shift: value for j, value in enumerate(eulerian_row(n))}
    actual = tallies[name].counts
    return tallies[name].as_json(), _mismatch(expected, actual)

  return evaluate


def _equal_census(first: str, second: str) -> Callable[[int, Dict[str, Histogram]], Tuple[Any, Optional[str]]]:
  def evaluate(n: int, tallies: Dict[str, Histogram]) -> Tuple[Any, Optional[str]]:
    return tallies[first].as_json(), _mismatch(tallies[second].counts, tallies[first].counts)

  return evaluate


def _schroeder_census(name: str) -> Callable[[int, Dict[str, Histogram]], Tuple[Any, Optional[str]]]:
  def evaluate(n: int, tallies: Dict[str, Histogram]) -> Tuple[Any, Optional[str]]:
    count = tallies[name].counts.get(1, 0)
    return count, _mismatch({"count": schroeder(n - 1)}, {"count": count})

  return evaluate


# tableau oracle


@cache
def _oracle(n: int) -> Tuple[PermutationTableau, ...]:
  with c.time_block(f"tableau oracle n={n}"):
    return tuple(enum_tableaux_bruteforce(n))


def _oracle_count(n: int) -> Tuple[int, Any, Optional[str]]:
  count = len(_oracle(n))
  return count, count, _mismatch({"count": factorial(n)}, {"count": count})


def _oracle_image(n: int) -> Tuple[int, Any, Optional[str]]:
  oracle = set(_oracle(n))
  image = {lp_to_tableau(lp) for lp in enum_linked_partitions(n)}
  if oracle == image:
    return len(oracle), len(image), None
  missing = sorted(to_json(t) for t in oracle - image)
  extra = sorted(to_json(t) for t in image - oracle)
  return len(oracle), len(image), dumps({"notInImage": missing[:1], "notInOracle": extra[:1]})


def _oracle_roundtrip(n: int) -> Tuple[int, Any, Optional[str]]:
  for t in _oracle(n):
    try:
      if tableau_from_dots(dots_of(t)) != t:
        return len(_oracle(n)), None, f"{to_json(t)} is not rebuilt from its dots"
      if lp_to_tableau(tableau_to_lp(t)) != t:
        return len(_oracle(n)), None, f"{to_json(t)} does not survive tableau_to_lp then lp_to_tableau"
    except (AssertionError, ValueError) as e:
      return len(_oracle(n)), None, f"{to_json(t)} {type(e).__name__}: {e}"
  return len(_oracle(n)), len(_oracle(n)), None


def _oracle_rows_eulerian(n: int) -> Tuple[int, Any, Optional[str]]:
  histogram = distribution(_oracle(n), Statistic.Rows)
  expected = {k + 1: value for k, value in enumerate(eulerian_row(n))}
  return histogram.total, histogram.as_json(), _mismatch(expected, histogram.counts)


def _oracle_avoiding(kind: PatternKind) -> Callable[[int], Tuple[int, Any, Optional[str]]]:
  def evaluate(n: int) -> Tuple[int, Any, Optional[str]]:
    oracle = _oracle(n)
    count = sum(1 for t in oracle if find_pattern(dots_of(t), kind) is None)
    return len(oracle), count, _mismatch({"count": schroeder(n - 1)}, {"count": count})

  return evaluate


# corollaries


def _block_minima(lp: LinkedPartition) -> Optional[str]:
  kinds = classify_vertices(lp)
  minima = len(kinds.origins) + len(kinds.transients) + len(kinds.singletons)
  if not (minima == block_count(lp) == len(blocks_of(lp))):
    return f"{minima} origins, transients and singletons but {len(blocks_of(lp))} blocks"
  return None


def _arcs_dots(lp: LinkedPartition) -> Optional[str]:
  dots = dots_of(lp_to_tableau(lp)).dots
  if len(dots) != len(lp.arcs):
    return f"{len(lp.arcs)} arcs but {len(dots)} dots"
  return None


def _transients_restricted_zeros(lp: LinkedPartition) -> Optional[str]:
  transients = classify_vertices(lp).transients
  rows = dots_of(lp_to_tableau(lp)).restricted_zero_rows()
  if transients != rows:
    return f"transients {list(transients)} but restricted 0 rows {list(rows)}"
  return None


def _singletons_empty_rows(lp: LinkedPartition) -> Optional[str]:
  singletons = classify_vertices(lp).singletons
  rows = dots_of(lp_to_tableau(lp)).empty_rows()
  if singletons != rows:
    return f"singletons {list(singletons)} but empty rows {list(rows)}"
  return None


# patterns


def _pattern_search(lp: LinkedPartition) -> Optional[str]:
  d = dots_of(lp_to_tableau(lp))
  for kind in PatternKind:
    fast = find_pattern(d, kind)
    brute = next(pattern_witnesses(d, kind), None)
    if fast != brute:
      return f"{kind.value}: search found {fast}, brute force {brute}"
  return None


def _pattern_agreement(kind: PatternKind, arcPredicate: Callable[[LinkedPartition], bool]):
  def inspect(lp: LinkedPartition) -> Optional[str]:
    witness = find_pattern(dots_of(lp_to_tableau(lp)), kind)
    if arcPredicate(lp) != (witness is None):
      return f"{arcPredicate.__name__}={arcPredicate(lp)} but {kind.value} witness {witness}"
    return None

  return inspect


def _build_checks() -> List[VerificationCheck]:
  lpKind = ObjectKind.LinkedPartition
  permKind = ObjectKind.Permutation
  return [
    PointwiseCheck(CheckID.LP_PERM_ROUNDTRIP, lpKind, _lp_perm_roundtrip),
    PointwiseCheck(CheckID.PERM_LP_ROUNDTRIP, permKind, _perm_lp_roundtrip),
    PointwiseCheck(CheckID.LP_TABLEAU_ROUNDTRIP, lpKind, _lp_tableau_roundtrip),
    PointwiseCheck(CheckID.DOTS_RECONSTRUCTION, lpKind, _dots_reconstruction),
    PointwiseCheck(CheckID.BLOCKS_ROUNDTRIP, lpKind, _blocks_roundtrip),
    PointwiseCheck(CheckID.PERM_TABLEAU_ROUNDTRIP, permKind, _perm_tableau_roundtrip),
    CensusCheck(
      CheckID.EULERIAN_DESCENT_CENSUS,
      {"descents": (permKind, lambda p: len(descents(p)))},
      _eulerian_census("descents", 0),
    ),
    CensusCheck(
      CheckID.BLOCKS_EULERIAN, {"blocks": (lpKind, block_count)}, _eulerian_census("blocks", 1)
    ),
    PointwiseCheck(CheckID.DESCENT_TRANSPORT, lpKind, _descent_transport),
    CensusCheck(
      CheckID.ROWS_WEAK_EXCEDANCES,
      {
        "rows": (lpKind, lambda lp: len(lp_to_tableau(lp).shape.rows)),
        "weak_excedances": (permKind, weak_excedances),
      },
      _equal_census("rows", "weak_excedances"),
    ),
    CensusCheck(
      CheckID.COLUMNS_DESCENTS,
      {
        "columns": (lpKind, lambda lp: len(lp_to_tableau(lp).shape.columns)),
        "descents": (permKind, lambda p: len(descents(p))),
      },
      _equal_census("columns", "descents"),
    ),
    WholeCheck(CheckID.ORACLE_COUNT, _oracle_count),
    WholeCheck(CheckID.ORACLE_IMAGE, _oracle_image),
    WholeCheck(CheckID.ORACLE_ROUNDTRIP, _oracle_roundtrip),
    WholeCheck(CheckID.ORACLE_ROWS_EULERIAN, _oracle_rows_eulerian),
    PointwiseCheck(CheckID.BLOCK_MINIMA, lpKind, _block_minima),
    PointwiseCheck(CheckID.ARCS_DOTS, lpKind, _arcs_dots),
    PointwiseCheck(CheckID.TRANSIENTS_RESTRICTED_ZEROS, lpKind, _transients_restricted_zeros),
    PointwiseCheck(CheckID.SINGLETONS_EMPTY_ROWS, lpKind, _singletons_empty_rows),
    PointwiseCheck(CheckID.PATTERN_SEARCH, lpKind, _pattern_search, maxN=c.maxPatternN),
    PointwiseCheck(
      CheckID.NONCROSSING_J2,
      lpKind,
      _pattern_agreement(PatternKind.J2, is_noncrossing),
      maxN=c.maxPatternN,
    ),
    PointwiseCheck(
      CheckID.NONNESTING_I2,
      lpKind,
      _pattern_agreement(PatternKind.I2, is_nonnesting),
      maxN=c.maxPatternN,
      observed=True,
    ),
    CensusCheck(
      CheckID.SCHROEDER_NONCROSSING,
      {"noncrossing": (lpKind, lambda lp: int(is_noncrossing(lp)))},
      _schroeder_census("noncrossing"),
      maxN=c.maxPatternN,
    ),
    CensusCheck(
      CheckID.SCHROEDER_NONNESTING,
      {"nonnesting": (lpKind, lambda lp: int(is_nonnesting(lp)))},
      _schroeder_census("nonnesting"),
      maxN=c.maxPatternN,
    ),
    WholeCheck(CheckID.SCHROEDER_J2_ORACLE, _oracle_avoiding(PatternKind.J2)),
    WholeCheck(CheckID.SCHROEDER_I2_ORACLE, _oracle_avoiding(PatternKind.I2)),
  ]


@cache
def registered_checks() -> Dict[CheckID, VerificationCheck]:
  checks = _build_checks()
  registry = {check.get_check_id(): check for check in checks}
  assert len(registry) == len(checks), "a CheckID is assigned to more than one check"
  assert set(registry) == set(CheckID), "every CheckID must have a check"
  return registry


def checks_for_suite(suite: Suite) -> List[VerificationCheck]:
  """Checks of suite in declaration order; Suite.All runs every suite in turn."""
  registry = registered_checks()
  return [registry[checkID] for checkID in CheckID if suite == Suite.All or checkID.get_suite() == suite]


def plan_shards(size: Optional[int], threads: int) -> List[Tuple[int, Optional[int]]]:
  """Splits ranks [0, size) into at most `threads` contiguous ranges of at least minShardSize."""
  if size is None or threads <= 1 or size < 2 * c.minShardSize:
    return [(0, None)]
  shardSize = max(c.minShardSize, -(-size // threads))
  return [(start, min(start + shardSize, size)) for start in range(0, size, shardSize)]


def _run_shard(checkID: CheckID, n: int, start: int, stop: Optional[int]) -> ShardResult:
  return registered_checks()[checkID].run_shard(n, start, stop)


def _execute(tasks: List[Tuple[CheckID, int, int, Optional[int]]], threads: int) -> List[ShardResult]:
  if threads <= 1:
    return [_run_shard(*task) for task in tasks]
  with concurrent.futures.ProcessPoolExecutor(
    mp_context=multiprocessing.get_context("fork"),
    max_workers=threads,
  ) as executor:
    logger.info(f"Starting parallel verification with {len(tasks)} shards on {threads} workers.")
    futures = [
      executor.submit(_run_shard, checkID=checkID, n=n, start=start, stop=stop)
      for checkID, n, start, stop in tasks
    ]
    return [f.result() for f in futures]


def check_n_max(nMax: int) -> None:
  """Raises ValueError unless 1 <= nMax <= maxFactorialN."""
  if isinstance(nMax, bool) or not isinstance(nMax, int) or not (1 <= nMax <= c.maxFactorialN):
    raise ValueError(f"--n-max must be in [1, {c.maxFactorialN}], got {nMax!r}")


def run_suite(suite: Suite, nMax: int, threads: Optional[int] = None) -> VerifyReport:
  """Runs every check of suite for n = 1..min(nMax, check guard) and builds the report.

  Args:
    suite: suite to run.
    nMax: largest size, at most maxFactorialN.
    threads: worker cap; defaults to PTAB_THREADS.

  Raises:
    ValueError if nMax is out of range or PTAB_THREADS is malformed.
  """
  check_n_max(nMax)
  threads = c.get_thread_count() if threads is None else threads
  checks = checks_for_suite(suite)
  tasks: List[Tuple[CheckID, int, int, Optional[int]]] = []
  for check in checks:
    for n in range(1, min(nMax, check.get_max_n()) + 1):
      for start, stop in plan_shards(check.stream_size(n), threads):
        tasks.append((check.get_check_id(), n, start, stop))

  startTime = time.perf_counter()
  with c.time_block(f"verify suite={suite.value} nMax={nMax}"):
    results = _execute(tasks, threads)

  grouped: Dict[Tuple[CheckID, int], List[ShardResult]] = {}
  for (checkID, n, _, _), result in zip(tasks, results):
    grouped.setdefault((checkID, n), []).append(result)

  records = []
  for check in checks:
    nTop = min(nMax, check.get_max_n())
    summary: Dict[int, Any] = {}
    checked = 0
    counterexample = None
    counterexampleN = None
    for n in range(1, nTop + 1):
      merged = reduce(ShardResult.merge, grouped[(check.get_check_id(), n)])
      outcome = check.conclude(n, merged)
      summary[n] = outcome.summary
      checked += merged.checked
      if outcome.counterexample is not None and counterexample is None:
        counterexample, counterexampleN = outcome.counterexample, n
    if check.is_observed():
      status = RecordStatus.Observed
    else:
      status = RecordStatus.Pass if counterexample is None else RecordStatus.Fail
    records.append(
      CheckRecord(
        name=check.get_name(),
        suite=check.get_check_id().get_suite().value,
        nMin=1,
        nMax=nTop,
        status=status,
        checked=checked,
        summary=summary,
        counterexample=counterexample,
        counterexampleN=counterexampleN,
      )
    )
    if status == RecordStatus.Fail:
      logger.warning(f"{check.get_name()} failed at n={counterexampleN}: {counterexample}")

  report = VerifyReport(suite.value, records, time.perf_counter() - startTime)
  logger.info(f"Verification summary:\n{report.as_frame().to_string(index=False)}")
  return report
