import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from ahpcompare.corpus import get_dataset  # noqa: E402


@pytest.fixture
def customer():
    return get_dataset("Customer").matrix


@pytest.fixture
def vendors():
    return get_dataset("Vendors").matrix


@pytest.fixture
def risk():
    return get_dataset("Risk").matrix


# the whole suite must finish within this budget; checked once per session
RUNTIME_BUDGET = 10.0
_started = {}


def pytest_sessionstart(session):
    _started["t"] = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _started["t"]
    session.config._suite_elapsed = elapsed
    if elapsed > RUNTIME_BUDGET and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    elapsed = getattr(config, "_suite_elapsed", None)
    if elapsed is None:
        return
    status = "PASS" if elapsed <= RUNTIME_BUDGET else "FAIL"
    terminalreporter.write_line(f"criterion 7 (suite runtime {elapsed:.2f}s under {RUNTIME_BUDGET:g}s): {status}")
