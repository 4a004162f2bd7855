import sys
from pathlib import Path

import pytest

from catrank.framework import new_af
from catrank.io import parse_apx

FIXTURES = Path(__file__).parent / "fixtures"

EXAMPLE1_ATTACKS = [
    ("x4", "x1"),
    ("x3", "x4"),
    ("x4", "x2"),
    ("x5", "x4"),
    ("x5", "x2"),
    ("x2", "x5"),
    ("x5", "x5"),
    ("x2", "x2"),
]

# Fixed point of example1 from a 50-digit mpmath Newton solve (see test_solver).
EXAMPLE1_FIXED_POINT = [
    0.71549437048307299893,
    0.42737291253094956961,
    1.0,
    0.39763503565351639582,
    0.51486893843871658690,
]


def load(name: str):
    return parse_apx((FIXTURES / name).read_text())


@pytest.fixture
def example1():
    return new_af(["x1", "x2", "x3", "x4", "x5"], EXAMPLE1_ATTACKS)


def cycle(k: int):
    names = [f"c{i}" for i in range(k)]
    return new_af(names, [(names[i], names[(i + 1) % k]) for i in range(k)])


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
