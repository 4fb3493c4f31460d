import numpy as np
import pytest
from hypothesis import settings

from conceptq import datasets

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def table1():
    return datasets.fruits_vegetables()


@pytest.fixture(scope="session")
def printed():
    return datasets.fruits_vegetables_printed()


@pytest.fixture
def rng():
    return np.random.default_rng(20091030)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split("criterion")[1].split(":")[0])):
        terminalreporter.write_line(line)
