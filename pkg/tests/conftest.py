from fractions import Fraction

import pytest
from hypothesis import settings

from affspringer.chevalley import algebra

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# one line per acceptance criterion, filled in by test_acceptance
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def a2():
    """A2 with alpha = a1 = (1, 0), beta = a2 = (0, 1)."""
    alg = algebra("A2")
    rs = alg.rs
    alpha, beta, ab = rs.index[(1, 0)], rs.index[(0, 1)], rs.index[(1, 1)]
    return alg, alpha, beta, ab


def frac(s):
    return Fraction(s)
