"""Acceptance battery: one test per criterion, one pass/fail line each."""

import pytest

from pbwdegen import suite


def _run(number, name, func):
    ok, detail = func()
    print(f"acceptance {number:2d} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
    assert ok, f"criterion {number} ({name}): {detail}"


@pytest.mark.parametrize(
    "number,name,func",
    [(i + 1, name, func) for i, (name, func) in enumerate(suite.CHECKS)],
    ids=[name.replace(" ", "-") for name, _ in suite.CHECKS],
)
def test_acceptance(number, name, func):
    _run(number, name, func)
