"""PYTEST_DONT_REWRITE: inspect callbacks must raise plain AssertionError messages."""

import pytest

from linkedpartitions import constants as c
from linkedpartitions.enums import ObjectKind, RecordStatus, Suite
from linkedpartitions.enumeration import Histogram
from linkedpartitions.verification import (
  CheckID,
  PointwiseCheck,
  ShardResult,
  _execute,
  check_n_max,
  checks_for_suite,
  plan_shards,
  registered_checks,
  run_suite,
)


def test_every_check_id_is_registered():
  assert set(registered_checks()) == set(CheckID)
  names = [checkID.get_name() for checkID in CheckID]
  assert len(names) == len(set(names))


def test_checks_for_suite():
  assert [check.get_name() for check in checks_for_suite(Suite.TableauOracle)] == [
    "OracleCount",
    "OracleImage",
    "OracleRoundtrip",
    "OracleRowsEulerian",
  ]
  assert len(checks_for_suite(Suite.All)) == len(CheckID)


@pytest.mark.parametrize(
  "size,threads,shards",
  [
    (None, 4, [(0, None)]),
    (5040, 1, [(0, None)]),
    (720, 4, [(0, None)]),
    (5040, 4, [(0, 1260), (1260, 2520), (2520, 3780), (3780, 5040)]),
    (1200, 8, [(0, 512), (512, 1024), (1024, 1200)]),
  ],
)
def test_plan_shards(size, threads, shards):
  assert plan_shards(size, threads) == shards


def test_shard_merge_keeps_lowest_rank_counterexample():
  first = ShardResult(checked=3, failures=1, counterexample="late", counterexampleRank=40)
  second = ShardResult(
    checked=2, failures=1, counterexample="early", counterexampleRank=7, tallies={"x": Histogram({1: 2}, 2)}
  )
  merged = first.merge(second)
  assert merged.checked == 5
  assert merged.failures == 2
  assert merged.counterexample == "early"
  assert merged.tallies["x"].counts == {1: 2}
  assert ShardResult().merge(first).counterexample == "late"


def test_pointwise_check_reports_first_failure():
  check = PointwiseCheck(
    CheckID.BLOCK_MINIMA, ObjectKind.LinkedPartition, lambda lp: "has arcs" if lp.arcs else None
  )
  result = check.run_shard(3, 0, None)
  assert result.checked == 6
  assert result.failures == 5
  assert result.counterexample == '{"n":3,"arcs":[[1,3]]} has arcs'
  assert result.counterexampleRank == 1


def test_pointwise_check_catches_assertions():
  def inspect(lp):
    assert not lp.arcs, "boom"

  result = PointwiseCheck(CheckID.BLOCK_MINIMA, ObjectKind.LinkedPartition, inspect).run_shard(2, 0, None)
  assert result.failures == 1
  assert result.counterexample == '{"n":2,"arcs":[[1,2]]} AssertionError: boom'


@pytest.mark.parametrize("nMax", [0, 9, True])
def test_check_n_max(nMax):
  with pytest.raises(ValueError):
    check_n_max(nMax)


def test_run_suite_all_small():
  report = run_suite(Suite.All, 5, threads=1)
  assert report.passed
  records = {record.name: record for record in report.records}
  assert [record.name for record in report.records] == [checkID.get_name() for checkID in CheckID]

  assert records["LpPermRoundtrip"].status == RecordStatus.Pass
  assert records["LpPermRoundtrip"].checked == 1 + 2 + 6 + 24 + 120
  assert records["OracleCount"].summary == {1: 1, 2: 2, 3: 6, 4: 24, 5: 120}
  assert records["OracleRowsEulerian"].summary[5] == {"1": 1, "2": 26, "3": 66, "4": 26, "5": 1}
  assert records["BlocksEulerian"].summary[3] == {"1": 1, "2": 4, "3": 1}
  assert records["SchroederNoncrossing"].summary == {1: 1, 2: 2, 3: 6, 4: 22, 5: 90}
  assert records["SchroederNonnesting"].summary == {1: 1, 2: 2, 3: 6, 4: 22, 5: 90}
  assert records["SchroederJ2AvoidingTableaux"].summary[5] == 90

  nonnesting = records["NonnestingI2Avoiding"]
  assert nonnesting.status == RecordStatus.Observed
  assert nonnesting.summary[4] == {"checked": 24, "disagreements": 0}
  assert nonnesting.summary[5]["disagreements"] > 0
  assert nonnesting.counterexampleN == 5
  assert records["SchroederI2AvoidingTableaux"].status == RecordStatus.Pass
  assert records["SchroederI2AvoidingTableaux"].summary == {1: 1, 2: 2, 3: 6, 4: 22, 5: 90}

  payload = report.as_dict()
  assert payload["status"] == "pass"
  assert payload["records"][0]["summary"]["1"] == 1
  assert list(report.as_frame().columns) == ["check", "suite", "n", "status", "checked"]


def test_guards_cap_each_check():
  records = {record.name: record for record in run_suite(Suite.TableauOracle, 2, threads=1).records}
  assert all(record.nMax == 2 for record in records.values())


def test_sharded_execution_matches_single_shard():
  tasks = [(CheckID.BLOCKS_ROUNDTRIP, 7, start, stop) for start, stop in plan_shards(5040, 2)]
  assert len(tasks) == 2
  results = _execute(tasks, 2)
  assert [result.checked for result in results] == [2520, 2520]
  assert sum(result.failures for result in results) == 0


def test_thread_count_from_environment(monkeypatch):
  monkeypatch.delenv(c.threadsEnvVar, raising=False)
  assert c.get_thread_count() == 1
  monkeypatch.setenv(c.threadsEnvVar, "4")
  assert c.get_thread_count() == 4
  for raw in ("0", "four"):
    monkeypatch.setenv(c.threadsEnvVar, raw)
    with pytest.raises(ValueError):
      c.get_thread_count()
