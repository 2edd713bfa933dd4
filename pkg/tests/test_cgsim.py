"""
Computation graph simulators and growth analysis
"""

import math

import pytest

from quest_graph.cgsim import (
    SimReport,
    OpCounter,
    compute_counts,
    fit_points,
    growth_fit,
    live_intermediates,
    lm_window_witness,
    plot_growth,
    rqdp_ratio_band,
    s_bounds,
    sim_fqdp,
    sim_questgraph,
    sim_rqdp,
)
from quest_graph.compgraph import Dag, Mcg, bmcg_from_mcg
from quest_graph.qdp import RULE_CHILD_LIMIT


def fibonacci_dag(n):
    edges = [("f0", "f1")]
    for i in range(2, n):
        edges += [(f"f{i - 1}", f"f{i}"), (f"f{i - 2}", f"f{i}")]
    return Dag.from_edges(edges)


@pytest.mark.parametrize("n, bounds", [(1, (1, 1)), (2, (2, 3)), (4, (8, 15)), (10, (512, 1023))])
def test_s_bounds(n, bounds):
    assert s_bounds(n) == bounds


def test_s_bounds_closed_forms_hold():
    for n in range(1, 31):
        lower, upper = s_bounds(n)
        assert (lower, upper) == (2 ** (n - 1), 2 ** n - 1)
    with pytest.raises(ValueError):
        s_bounds(0)


def test_questgraph_single_node():
    report = sim_questgraph(bmcg_from_mcg(Mcg.of_size(1), 2))
    assert report.halted
    assert report.details["visits"] == {"n0": 1}
    assert report.counter.respond_move == 1
    assert report.counter.stop == 1


@pytest.mark.parametrize("n, c", [(8, 2), (6, 3), (12, 4)])
def test_questgraph_computes_each_node_once(n, c):
    bmcg = bmcg_from_mcg(Mcg.of_size(n), c)
    report = sim_questgraph(bmcg)
    assert report.halted
    assert report.n == n
    assert report.details["visits"] == {label: 1 for label in bmcg.order}
    assert report.counter.respond_move <= 2 * len(bmcg)
    assert report.raw_ops == report.weighted_cost


@pytest.mark.parametrize("n", [1, 2, 5, 16])
def test_rqdp_retrieves_once_per_edge(n):
    report = sim_rqdp(Mcg.of_size(n), 4)
    assert report.counter.retrieve == n * (n - 1) // 2
    assert set(compute_counts(report).values()) == {1}
    assert report.details["references"] == n


def test_rqdp_single_node_cost():
    report = sim_rqdp(Mcg.of_size(1), 4)
    assert report.counter.retrieve == 0
    assert report.raw_ops == 2


def test_rqdp_on_a_fibonacci_dag():
    dag = fibonacci_dag(10)
    assert len(dag.edges) == 17
    report = sim_rqdp(dag, 2)
    assert report.counter.retrieve == 17
    assert compute_counts(report) == {f"f{i}": 1 for i in range(10)}


def test_rqdp_runs_under_the_context_capacity():
    narrow = sim_rqdp(Mcg.of_size(6), 2)
    assert narrow.halted
    assert narrow.details["truncations"] > 0
    assert narrow.counter.retrieve == 15
    assert narrow.raw_ops == sim_rqdp(Mcg.of_size(6), 8).raw_ops


def test_rqdp_halts_when_a_node_cannot_see_its_children():
    report = sim_rqdp(Mcg.of_size(3), 1)
    assert not report.halted
    assert report.details["violation"] == RULE_CHILD_LIMIT


def test_rqdp_weights_lookups_by_log_of_active_references():
    report = sim_rqdp(Mcg.of_size(3), 4)
    assert report.weighted_cost > report.raw_ops - report.counter.retrieve
    assert report.weighted_cost >= report.raw_ops


@pytest.mark.parametrize("n", [1, 2, 3, 6, 9])
@pytest.mark.parametrize("c", [2, 3])
def test_fqdp_recomputes_exponentially(n, c):
    report = sim_fqdp(bmcg_from_mcg(Mcg.of_size(n), c))
    lower, upper = s_bounds(n)
    assert lower <= report.details["computes"] <= upper
    assert report.details["computes"] == 2 ** (n - 1)
    assert compute_counts(report)[f"n{n - 1}"] == 1


def test_fqdp_counts_come_from_the_rollout():
    report = sim_fqdp(bmcg_from_mcg(Mcg.of_size(4), 3))
    assert report.halted
    assert report.details["proxy_computes"] == 0
    assert report.counter.complete == 8
    assert report.counter.discover == 7
    assert report.raw_ops == 16


def test_fqdp_cap():
    with pytest.raises(ValueError):
        sim_fqdp(bmcg_from_mcg(Mcg.of_size(6), 2), cap=5)


@pytest.mark.parametrize("c", [2, 3, 4])
def test_window_witness(c):
    assert lm_window_witness(range(1, 20), c) == 2 * c + 1


def test_window_fits_small_graphs():
    assert lm_window_witness(range(1, 5), 2) is None
    assert live_intermediates(bmcg_from_mcg(Mcg.of_size(1), 2)) == 0


def test_power_law_fit():
    fit = fit_points("square", [(n, n ** 2) for n in range(2, 13)])
    assert fit.slope == pytest.approx(2.0)
    assert fit.residual == pytest.approx(0.0, abs=1e-9)
    assert not fit.super_polynomial


def test_exponential_growth_is_flagged():
    fit = fit_points("doubling", [(n, 2 ** n) for n in range(2, 13)])
    assert fit.super_polynomial
    assert fit.local_slopes[-1] > fit.local_slopes[0]


def test_fit_needs_enough_sizes():
    with pytest.raises(ValueError):
        fit_points("few", [(1, 1), (2, 4), (3, 9), (4, 16)])


def test_growth_fit_uses_one_variant():
    reports = [SimReport("qg", n, 2, OpCounter(respond_move=n), True) for n in range(1, 6)]
    reports.append(SimReport("rqdp", 3, 2, OpCounter(discover=3), True))
    with pytest.raises(ValueError):
        growth_fit(reports)
    assert growth_fit(reports[:-1]).slope == pytest.approx(1.0)


def test_rqdp_band_is_tight():
    reports = [sim_rqdp(Mcg.of_size(n), 4) for n in (8, 16, 32, 64)]
    band = rqdp_ratio_band(reports)
    assert 1.0 <= band < 2.0
    with pytest.raises(ValueError):
        rqdp_ratio_band([sim_rqdp(Mcg.of_size(1), 4)])


@pytest.mark.slow
def test_questgraph_growth_is_quadratic():
    reports = [sim_questgraph(bmcg_from_mcg(Mcg.of_size(n), 4)) for n in (4, 8, 16, 32, 64)]
    fit = growth_fit(reports)
    assert 1.8 < fit.slope < 2.2
    assert not fit.super_polynomial


def test_plot_growth(tmp_path):
    fit = fit_points("square", [(n, n ** 2) for n in range(2, 9)])
    path = plot_growth([fit], tmp_path / "growth.png")
    assert (tmp_path / "growth.png").stat().st_size > 0
    assert path.endswith("growth.png")


def test_report_csv_row():
    counter = OpCounter(discover=2)
    counter.add_retrieve(4)
    report = SimReport("rqdp", 3, 2, counter, True, wall_ms=1.23456)
    assert report.csv_row() == {"variant": "rqdp", "N": 3, "C": 2, "raw_ops": 3,
                                "weighted_cost": 4.0, "wall_ms": 1.235}
    assert math.isclose(counter.as_dict()["weighted_cost"], 4.0)
