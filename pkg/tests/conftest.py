import pytest

from wadgeforest.qspec import builtin

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def Q2():
    return builtin("antichain:2")


@pytest.fixture(scope="session")
def Q3():
    return builtin("antichain:3")


@pytest.fixture(scope="session")
def flat3():
    return builtin("flat3")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
