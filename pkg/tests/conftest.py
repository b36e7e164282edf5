import pytest

from ramseytower.chain import LevelChain


@pytest.fixture(scope="session")
def chain42():
    return LevelChain(4, 2)


@pytest.fixture(scope="session")
def chain93():
    return LevelChain(9, 3)


ACCEPTANCE_LINES = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
