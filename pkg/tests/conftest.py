"""Collects one line per acceptance criterion and prints them after the run."""

import time
from contextlib import contextmanager

import pytest

_RESULTS: dict[int, tuple[str, str]] = {}


class _Criterion:
    def __init__(self, number: int, label: str):
        self.number = number
        self.label = label
        self.details: list[str] = []

    def note(self, text: str) -> None:
        self.details.append(text)


@pytest.fixture
def criterion():
    @contextmanager
    def open_criterion(number: int, label: str):
        c = _Criterion(number, label)
        t0 = time.perf_counter()
        status = "FAIL"
        try:
            yield c
            status = "PASS"
        finally:
            elapsed = time.perf_counter() - t0
            extra = "; ".join(c.details)
            line = f"{label} ({elapsed:.2f} s)" + (f" -- {extra}" if extra else "")
            _RESULTS[number] = (status, line)
    return open_criterion


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, line = _RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {line}")
