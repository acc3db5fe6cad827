"""One test per acceptance criterion; each prints a PASS/FAIL line.

Slow parts (large censuses and searches) run with --runslow.
"""
import pytest

from meanderknots.acceptance import CRITERIA


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check, request, capsys):
    slow = request.config.getoption("--runslow")
    ok, detail = check(slow)
    with capsys.disabled():
        print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number} ({title}): {detail}")
    assert ok, detail
