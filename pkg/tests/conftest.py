import pytest

from matroid_joints.construct import build_construction

# Filled by tests/test_acceptance.py; echoed after the run so the
# per-criterion verdicts survive pytest's output capture.
acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def acceptance_log():
    return acceptance_lines


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def build5():
    return build_construction(5)


@pytest.fixture(scope="session")
def build200():
    return build_construction(200)


@pytest.fixture(scope="session")
def matroid200(build200):
    m = build200.matroid.to_matroid()
    lines = build200.matroid.matroid_lines()
    return m, lines
