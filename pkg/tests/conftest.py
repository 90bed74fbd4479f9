import pytest

from cubicspan.gf import make_field
from cubicspan.surface import CubicSurface

ACCEPTANCE_LINES: list[str] = []


def fermat(F):
    return CubicSurface.from_terms(F, {(3, 0, 0, 0): 1, (0, 3, 0, 0): 1, (0, 0, 3, 0): 1, (0, 0, 0, 3): 1})


@pytest.fixture(scope="session")
def fermat7():
    return fermat(make_field(7))


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
