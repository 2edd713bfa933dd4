"""
Shared test fixtures
"""

from pathlib import Path

import pytest
from hypothesis import settings

from quest_graph.constructions.fixtures import (
    DPDA_FIXTURES,
    FSM_FIXTURES,
    GRAMMAR_FIXTURES,
    TM_FIXTURES,
)

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile("dev")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long sweeps over inputs or graph sizes")


@pytest.fixture
def fixture_dir() -> Path:
    return FIXTURE_DIR


@pytest.fixture(params=sorted(DPDA_FIXTURES))
def dpda(request):
    return DPDA_FIXTURES[request.param]()


@pytest.fixture(params=sorted(FSM_FIXTURES))
def fsm(request):
    return FSM_FIXTURES[request.param]()


@pytest.fixture(params=sorted(TM_FIXTURES))
def tm(request):
    return TM_FIXTURES[request.param]()


@pytest.fixture
def anbn_cnf():
    return GRAMMAR_FIXTURES["anbn"]()


@pytest.fixture
def db_path(tmp_path) -> str:
    return str(tmp_path / "bench_results.db")
