"""Acceptance criteria 1-8, one test and one PASS/FAIL line each.

Run under pytest (the lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""
from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import criteria  # noqa: E402

TITLES = {
    1: "root data",
    2: "fixed subalgebras of sigma",
    3: "Table 1 root maps",
    4: "dimension milestones",
    5: "table regeneration",
    6: "witnesses and separations",
    7: "gradation properties",
    8: "property suites",
}


def _line(k: int, res: criteria.Result) -> str:
    return f"criterion {k} ({TITLES[k]}): {'PASS' if res.ok else 'FAIL'}  {res.detail}"


@pytest.mark.acceptance
@pytest.mark.parametrize("k", sorted(criteria.CRITERIA))
def test_criterion(k):
    from conftest import ACCEPTANCE

    res = criteria.CRITERIA[k]()
    ACCEPTANCE[k] = (res.ok, f"({TITLES[k]}) {res.detail}")
    print(_line(k, res))
    assert res.ok, res.failures


if __name__ == "__main__":
    results = {k: f() for k, f in sorted(criteria.CRITERIA.items())}
    for k, res in results.items():
        print(_line(k, res))
    sys.exit(0 if all(r.ok for r in results.values()) else 1)
