"""Every acceptance criterion at its stated tolerance; one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines.
"""
import pytest

from knotbound import acceptance

CRITERIA = acceptance.criteria()


@pytest.mark.parametrize("run", CRITERIA, ids=[c.number for c in CRITERIA])
def test_criterion(run):
    result = run()
    print(result.line())
    assert result.passed, result.detail


def test_gordian_suite_within_budget_from_cold_cache():
    acceptance._homfly_cached.cache_clear()
    result = acceptance.gordian_suite()
    print(result.line())
    assert result.passed, result.detail
