from fractions import Fraction

import pytest

from galedeg import generators as gen
from galedeg.config import PointConfiguration, VectorConfiguration

A7_POINTS = [(0, 0, 0), (2, 0, 0), (0, 2, 0), (1, 0, 1), (1, 0, -1), (0, 1, 1), (0, 1, -1)]


@pytest.fixture
def pent():
    return gen.pentagon()


@pytest.fixture
def a7():
    return PointConfiguration.from_points(A7_POINTS)


@pytest.fixture
def square():
    return PointConfiguration.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def triangle():
    return PointConfiguration.from_points([(0, 0), (1, 0), (0, 1)])


@pytest.fixture
def cross():
    """{+-e1, +-e2} as a vector configuration."""
    return VectorConfiguration(2, ((1, 0), (-1, 0), (0, 1), (0, -1)))


def frac(s):
    return Fraction(s)


# one line per acceptance criterion, printed after the test run
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
