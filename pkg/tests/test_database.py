"""
Benchmark results database tests
"""

import pytest

from quest_graph.cgsim.report import OpCounter, SimReport
from quest_graph.database import ResultsManager


def _report(variant, n, discover=1, retrieve=0, halted=True):
    counter = OpCounter(discover=discover, complete=n)
    for _ in range(retrieve):
        counter.add_retrieve(4)
    return SimReport(variant=variant, n=n, c=2, counter=counter, halted=halted, wall_ms=0.5)


@pytest.fixture
def manager(db_path):
    manager = ResultsManager(db_path)
    yield manager
    manager.close()


def test_add_reports_counts_rows(manager):
    reports = [_report("qg", n) for n in (3, 1, 2)] + [_report("rqdp", 2, retrieve=1)]
    assert manager.add_reports(reports) == 4
    assert manager.add_report(_report("fqdp", 1)) is True


def test_runs_come_back_ordered(manager):
    manager.add_reports([_report("rqdp", 5), _report("qg", 4), _report("qg", 2)])
    runs = manager.get_runs()
    assert [(run.variant, run.n) for run in runs] == [("qg", 2), ("qg", 4), ("rqdp", 5)]
    assert [run.n for run in manager.get_runs("qg")] == [2, 4]


def test_stored_costs(manager):
    manager.add_report(_report("rqdp", 3, discover=2, retrieve=2))
    run = manager.get_runs("rqdp")[0]
    assert run.raw_ops == 2 + 3 + 2
    assert run.weighted_cost == pytest.approx(2 + 3 + 4.0)
    assert run.halted
    assert run.created_at is not None


def test_variants_and_stats(manager):
    manager.add_reports([_report("qg", 1), _report("qg", 2), _report("fqdp", 1)])
    assert manager.get_variants() == ["fqdp", "qg"]
    assert manager.get_database_stats() == {"runs": 3, "qg": 2, "fqdp": 1}


def test_delete_variant(manager):
    manager.add_reports([_report("qg", 1), _report("qg", 2), _report("rqdp", 1)])
    assert manager.delete_variant("qg") == 2
    assert manager.delete_variant("qg") == 0
    assert manager.get_variants() == ["rqdp"]


def test_run_repr(manager):
    manager.add_report(_report("qg", 3))
    assert repr(manager.get_runs()[0]) == "<BenchRun(variant=qg, N=3, C=2, raw_ops=4)>"
