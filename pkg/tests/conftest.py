"""Shared test plumbing: the acceptance-verdict reporter."""

from __future__ import annotations

import time
from contextlib import contextmanager

import pytest


@pytest.fixture
def criterion(request):
    """Factory for acceptance checks: prints one PASS/FAIL line per check.

    Lines go through the terminal reporter so they stay visible in the
    captured run log, and a budget overrun fails the test like any assert.
    """
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")

    def emit(number: int, name: str, verdict: str) -> None:
        line = f"ACCEPTANCE {number:02d} {name}: {verdict}"
        if reporter is not None:
            reporter.write_line(line)
        else:
            print(line, flush=True)

    @contextmanager
    def run(number: int, name: str, budget: float | None = None):
        start = time.perf_counter()
        try:
            yield
        except BaseException:
            emit(number, name, "FAIL")
            raise
        elapsed = time.perf_counter() - start
        if budget is not None and elapsed >= budget:
            emit(number, name, "FAIL")
            raise AssertionError(f"{name}: {elapsed:.4f} s exceeds the {budget} s budget")
        emit(number, name, "PASS")

    return run
