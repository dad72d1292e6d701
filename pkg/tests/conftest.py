from fractions import Fraction

import pytest
from hypothesis import strategies as st


def rationals(max_num=50, max_den=20):
    return st.builds(
        Fraction,
        st.integers(-max_num, max_num),
        st.integers(1, max_den),
    )


@pytest.fixture
def pascal():
    """Rows of Pascal's triangle built by addition only."""
    rows = [[1]]
    for _ in range(80):
        prev = rows[-1]
        rows.append([1] + [a + b for a, b in zip(prev, prev[1:])] + [1])
    return rows


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
