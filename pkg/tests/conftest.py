import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("fnq", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("fnq")

# property suites run at least this many cases
CASES = 1000


@pytest.fixture(scope="session")
def a5():
    from fnq.groups import alt

    return alt(5)


@pytest.fixture(scope="session")
def a6():
    from fnq.groups import alt

    return alt(6)


@pytest.fixture(scope="session")
def psp43():
    from fnq.groups import psp4

    return psp4(3)


# acceptance criteria append "PASS/FAIL ..." lines here; printed after the run
ACCEPTANCE: list[str] = []


@pytest.fixture
def acceptance_line():
    def emit(line):
        ACCEPTANCE.append(line)
        print(line)

    return emit


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
