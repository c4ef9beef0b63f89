import time
from contextlib import contextmanager

import pytest

REPORT: list[str] = []


@pytest.fixture
def criterion():
    @contextmanager
    def run(n, title):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {title} ({time.perf_counter() - start:.1f} s)"
            REPORT.append(line)
            print("\n" + line)
    return run


def pytest_terminal_summary(terminalreporter):
    if REPORT:
        terminalreporter.section("acceptance criteria")
        for line in REPORT:
            terminalreporter.write_line(line)
