import time
from contextlib import contextmanager

_ACCEPTANCE_LINES = []


@contextmanager
def criterion(number: int, label: str, limit_s: float):
    """Times one acceptance criterion and queues a pass/fail summary line."""
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        elapsed = time.perf_counter() - t0
        _ACCEPTANCE_LINES.append(
            f"ACCEPTANCE {number} FAIL  ({elapsed:6.2f}s / {limit_s:g}s)  {label}"
        )
        raise
    elapsed = time.perf_counter() - t0
    status = "PASS" if elapsed <= limit_s else "FAIL (over time budget)"
    _ACCEPTANCE_LINES.append(
        f"ACCEPTANCE {number} {status}  ({elapsed:6.2f}s / {limit_s:g}s)  {label}"
    )
    assert elapsed <= limit_s, f"criterion {number} exceeded {limit_s}s ({elapsed:.2f}s)"


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
