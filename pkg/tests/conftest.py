import pytest

from peisert import build_unit_group, chi4


@pytest.fixture(scope="session")
def G17():
    return build_unit_group(17)


@pytest.fixture(scope="session")
def G289():
    return build_unit_group(17, 2)


@pytest.fixture(scope="session")
def c17(G17):
    return chi4(G17)


@pytest.fixture(scope="session")
def c289(G289):
    return chi4(G289)


#: (criterion, status line) records filled by test_acceptance.py.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
