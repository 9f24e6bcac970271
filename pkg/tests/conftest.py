import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from horospherical.roots import build_root_system  # noqa: E402

_acceptance = []


@pytest.fixture
def fresh_root_systems():
    """Drop cached root systems before and after a test that patches the Cartan table."""
    build_root_system.cache_clear()
    yield
    build_root_system.cache_clear()


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome, duration in _acceptance:
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}  ({duration:.2f}s)")
