import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

ACCEPTANCE_LINES = []


@pytest.fixture
def datadir():
    return pathlib.Path(__file__).parent / "golden"


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance_report():
    return ACCEPTANCE_LINES.append
