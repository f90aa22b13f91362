import numpy as np
import pytest

from tprop.bialgebras import b1, b2

ACCEPTANCE: list[str] = []


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def B1():
    return b1()


@pytest.fixture
def B2():
    return b2()


@pytest.fixture
def acceptance():
    """Record one summary line per acceptance criterion."""

    def emit(line: str) -> None:
        ACCEPTANCE.append(line)
        print(line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
