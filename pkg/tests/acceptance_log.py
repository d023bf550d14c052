"""Collects one verdict line per acceptance criterion for the terminal summary."""

import time
from contextlib import contextmanager

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(number: int, title: str, limit: float):
    """Time the block; record PASS only if it finished without error inside `limit` seconds."""
    start = time.perf_counter()
    RESULTS[number] = f"FAIL  criterion {number:>2}: {title} (did not finish)"
    try:
        yield
    except BaseException as exc:
        elapsed = time.perf_counter() - start
        first = (str(exc).splitlines() or [""])[0]
        RESULTS[number] = f"FAIL  criterion {number:>2}: {title} ({elapsed:.1f}s / {limit:.0f}s) {type(exc).__name__}: {first}"
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed <= limit
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} ({elapsed:.1f}s / {limit:.0f}s)"
    assert ok, f"criterion {number} took {elapsed:.1f}s, limit {limit:.0f}s"
