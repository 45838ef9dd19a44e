import os
import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (criterion id, description, passed, seconds, bound, detail)
RESULTS: list = []


@contextmanager
def criterion(cid: str, text: str, bound: float):
    """Time a block and record PASS/FAIL; exceeding the bound fails the test."""
    start = time.perf_counter()
    entry = {"id": cid, "text": text, "bound": bound, "detail": ""}
    try:
        yield entry
    except BaseException:
        entry.update(passed=False, seconds=time.perf_counter() - start)
        RESULTS.append(entry)
        print(f"FAIL {cid}: {text} ({entry['seconds']:.2f}s)")
        raise
    elapsed = time.perf_counter() - start
    ok = elapsed < bound
    entry.update(passed=ok, seconds=elapsed)
    RESULTS.append(entry)
    extra = f" [{entry['detail']}]" if entry["detail"] else ""
    print(f"{'PASS' if ok else 'FAIL'} {cid}: {text} ({elapsed:.2f}s < {bound:g}s){extra}")
    assert ok, f"criterion {cid} took {elapsed:.1f}s, bound {bound}s"


@pytest.fixture
def acceptance():
    return criterion


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for e in sorted(RESULTS, key=lambda e: e["id"]):
        status = "PASS" if e["passed"] else "FAIL"
        extra = f"  {e['detail']}" if e["detail"] else ""
        terminalreporter.write_line(f"{status} {e['id']:>3} {e['seconds']:8.2f}s / {e['bound']:g}s  {e['text']}{extra}")
