from __future__ import annotations

import pytest

from tollkit.graph import Graph, family
from tollkit.io import enumerate_connected


@pytest.fixture(scope="session")
def connected_upto_7() -> list[Graph]:
    return [g for n in range(2, 8) for g in enumerate_connected(n)]


@pytest.fixture(scope="session")
def connected_upto_6() -> list[Graph]:
    return [g for n in range(2, 7) for g in enumerate_connected(n)]


@pytest.fixture
def paw() -> Graph:
    return family("paw_pendant", 4)


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number][1])
