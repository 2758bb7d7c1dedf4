"""
Shared fixtures.

Full enumerations and sweeps are marked ``slow`` and only run with --runslow.
"""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.diagram import parse_diagram
from src.groupoid import six_point_diagrams
from src.ranktwo import RankTwoOracle


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full enumeration or sweep runs")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def table_oracle():
    """Membership by table rows only (no closure fallback)."""
    return RankTwoOracle(mode="table")


@pytest.fixture(scope="session")
def hybrid_oracle():
    return RankTwoOracle(mode="hybrid")


@pytest.fixture
def q1():
    """First diagram of the six-point groupoid: (-1, ζ, -ζ²) chain."""
    return six_point_diagrams()[0]


@pytest.fixture
def q3():
    """The six-point triangle (-1, ζ², -1) with edges -ζ², ζ, -1."""
    return parse_diagram("3; -1 z3^2 -1; 12:-z3^2 13:z3 23:-1")
