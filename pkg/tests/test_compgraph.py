"""
DAG, MCG and BMCG transformation tests
"""

import pytest

from quest_graph.compgraph import (
    Dag,
    Mcg,
    bmcg_from_dag,
    bmcg_from_mcg,
    mcg_from_dag,
    proxy_count,
    total_proxy_count,
    validate_bmcg,
)
from quest_graph.utils.errors import CycleError, MachineFileError


@pytest.mark.parametrize("c, expected", [
    (2, [0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9]),
    (3, [0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 4]),
    (4, [0, 0, 0, 0, 1, 1, 1, 2, 2, 2, 3]),
])
def test_proxy_count_table(c, expected):
    assert [proxy_count(d, c) for d in range(1, 12)] == expected


def test_proxy_count_needs_a_real_bound():
    with pytest.raises(ValueError):
        proxy_count(5, 1)
    with pytest.raises(ValueError):
        total_proxy_count(5, 1)


def test_closed_form_matches_brute_force():
    for c in range(2, 9):
        for n in range(1, 501):
            closed, brute = total_proxy_count(n, c)
            assert closed == brute, (n, c)


def test_mcg_of_a_chain():
    mcg = Mcg.of_size(4)
    assert mcg.order == ["n0", "n1", "n2", "n3"]
    assert mcg.edge_count == 6
    assert len(list(mcg.edges())) == 6
    assert mcg.dependencies("n3") == ["n0", "n1", "n2"]
    assert mcg.terminal == "n3"
    assert not mcg.added_terminal


def test_mcg_preserves_dag_edges(fixture_dir):
    dag = Dag.from_edge_list(fixture_dir / "diamond.txt")
    mcg = mcg_from_dag(dag)
    assert mcg.order == ["a", "b", "c", "d"]
    assert mcg.preserves(dag)
    assert mcg.levels == {"a": 2, "b": 1, "c": 1, "d": 0}


def test_mcg_joins_several_sinks():
    dag = Dag.from_edges([("a", "b"), ("a", "c")])
    mcg = mcg_from_dag(dag)
    assert mcg.added_terminal
    assert mcg.terminal == "terminal"
    assert mcg.order == ["a", "b", "c", "terminal"]


def test_added_terminal_avoids_existing_labels():
    dag = Dag.from_edges([("terminal", "x"), ("terminal", "y")])
    assert mcg_from_dag(dag).terminal == "terminal'"


@pytest.mark.parametrize("n", [1, 2, 5, 9, 17])
@pytest.mark.parametrize("c", [2, 3, 4])
def test_bmcg_respects_the_bound(n, c):
    mcg = Mcg.of_size(n)
    bmcg = bmcg_from_mcg(mcg, c)
    assert validate_bmcg(bmcg, mcg, c) == []
    assert bmcg.max_in_degree <= c
    assert bmcg.contract() == mcg.dependency_map()
    assert len(bmcg.originals) == n
    assert bmcg.proxy_total == total_proxy_count(n, c)[0]


def test_validate_bmcg_flags_a_bad_bound():
    mcg = Mcg.of_size(6)
    bmcg = bmcg_from_mcg(mcg, 4)
    problems = validate_bmcg(bmcg, mcg, 2)
    assert problems
    assert all("in-degree" in p or "nodes, expected" in p for p in problems)


def test_star_needs_three_proxies_at_two(fixture_dir):
    dag = Dag.from_edge_list(fixture_dir / "star5.txt")
    bmcg = bmcg_from_dag(dag, 2)
    assert bmcg.proxy_total == 3
    assert bmcg.in_degree("hub") == 2
    assert bmcg.contract()["hub"] == frozenset(f"l{i}" for i in range(5))
    assert bmcg.stats()["nodes"] == 9


def test_bmcg_edge_list_of_a_chain():
    bmcg = bmcg_from_mcg(Mcg.of_size(3), 2)
    assert bmcg.to_edge_list() == ["n0 n1", "n0 n2", "n1 n2"]
    assert bmcg_from_mcg(Mcg.of_size(1), 2).to_edge_list() == ["n0"]


def test_edge_list_reading(fixture_dir):
    dag = Dag.from_edge_list(fixture_dir / "chain4.txt")
    assert dag.topological_order() == ["n0", "n1", "n2", "n3"]
    assert dag.predecessors("n2") == ["n1"]
    assert dag.terminals() == ["n3"]


def test_edge_list_declares_isolated_nodes():
    dag = Dag.from_edge_list(["solo", "a b  # trailing comment", ""])
    assert dag.nodes == ["solo", "a", "b"]
    assert dag.to_edge_list() == ["solo", "a b"]


def test_edge_list_cycle(fixture_dir):
    with pytest.raises(CycleError) as info:
        Dag.from_edge_list(fixture_dir / "cyclic.txt")
    assert len(info.value.back_edge) == 2


def test_edge_list_self_loop():
    with pytest.raises(CycleError):
        Dag.from_edge_list(["x x"])


def test_edge_list_errors(tmp_path):
    with pytest.raises(MachineFileError) as info:
        Dag.from_edge_list(["a b c"], path="inline")
    assert info.value.line == 1
    with pytest.raises(MachineFileError):
        Dag.from_edge_list(tmp_path / "missing.txt")


def test_chain_needs_a_node():
    with pytest.raises(ValueError):
        Dag.chain(0)
