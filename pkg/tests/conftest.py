import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", max_examples=40, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])


@pytest.fixture(scope="session")
def ars():
    from glrs.presets import load_preset
    return load_preset("ars")


@pytest.fixture(scope="session")
def dual():
    from glrs.presets import load_preset
    return load_preset("ars-dual")


@pytest.fixture(scope="session")
def amk():
    from glrs.presets import load_preset
    return load_preset("amk")


@pytest.fixture(scope="session")
def ctx(dual):
    from glrs.workbench import Context
    return Context(dual, 4)


@pytest.fixture(scope="session")
def calc(ctx):
    return ctx.calculus()
