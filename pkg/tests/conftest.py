from __future__ import annotations

import functools

import pytest

from hopfdouble import DoubleContext, builtin

# criterion number -> (outcome, note), filled in by test_acceptance
ACCEPTANCE: dict[int, list] = {}


@functools.lru_cache(maxsize=None)
def double_of(name: str) -> DoubleContext:
    """Shared contexts: building D(A) and its decompositions dominates the run time."""
    return DoubleContext(builtin(name))


@pytest.fixture
def ctx():
    return double_of


def pytest_runtest_logreport(report):
    crit = _criterion(report.nodeid)
    if crit is None:
        return
    entry = ACCEPTANCE.setdefault(crit, ["pass", ""])
    if report.failed:
        entry[0] = "FAIL"
        msg = str(report.longrepr).strip().splitlines()
        entry[1] = msg[-1] if msg else ""


def _criterion(nodeid: str):
    if "test_acceptance.py::test_criterion_" not in nodeid:
        return None
    return int(nodeid.split("test_criterion_")[1].split("_")[0])


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(ACCEPTANCE):
        outcome, note = ACCEPTANCE[crit]
        terminalreporter.write_line(f"criterion {crit:2d}: {outcome.upper():4s}  {note}")
