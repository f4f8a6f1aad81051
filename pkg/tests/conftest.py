import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

PRINTED_MATRIX = (
    (5, 6, 3, 2, 5, 1, 0, 0, 0, 0),
    (6, 1, 0, 0, 6, 0, 1, 0, 0, 0),
    (5, 3, 4, 2, 0, 0, 0, 1, 0, 0),
    (0, 5, 1, 6, 6, 0, 0, 0, 1, 0),
    (5, 6, 2, 1, 5, 0, 0, 0, 0, 1),
)


@pytest.fixture
def printed_matrix():
    from calabiwilf import EchelonMatrix

    return EchelonMatrix(PRINTED_MATRIX, 7)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
