from functools import lru_cache

import pytest

from bicyclic_estrada.enumerate import enumerate_bicyclic


@lru_cache(maxsize=None)
def bicyclic_classes(n):
    return tuple(enumerate_bicyclic(n))


@pytest.fixture(scope="session")
def classes():
    return bicyclic_classes


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
