from __future__ import annotations

import pytest

from orbitcodes.gf import make_field

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def f64():
    return make_field(2, 1, 6)


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 1, 4)


@pytest.fixture(scope="session")
def f81():
    return make_field(3, 1, 4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
