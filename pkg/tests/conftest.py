import os

import pytest
from hypothesis import HealthCheck, settings

SEED = int(os.environ.get("QHOPF_SEED", "0"))

settings.register_profile(
    "qhopf", max_examples=40, deadline=None, derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("qhopf")


@pytest.fixture
def seed():
    return SEED


ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
