import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from bimodal import GroupSpec, SetCollection  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def z10():
    return SetCollection.from_lists(GroupSpec.of(10), [[1, 6], [3, 8], [4, 9]])


@pytest.fixture
def z12_mixed():
    return SetCollection.from_lists(GroupSpec.of(12), [[4, 8], [3, 6, 9], [1], [2], [5], [7], [10], [11]])


@pytest.fixture
def z36():
    return SetCollection.from_lists(
        GroupSpec.of(36),
        [[12, 15, 30, 33], [1, 19], [4, 22], [7, 25], [10, 28], [13], [16], [31], [34]],
    )


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
