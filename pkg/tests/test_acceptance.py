"""Acceptance gate: one test and one printed PASS/FAIL line per criterion.

Run directly (python tests/test_acceptance.py) for the bare list of lines.
"""
import pytest

from rigidlie import claims

CHECKS = {check.__name__: check for check in claims.CHECKS}


@pytest.mark.parametrize("name", list(CHECKS))
def test_criterion(name, capsys):
    result = CHECKS[name]()
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.detail


if __name__ == "__main__":
    for check in claims.CHECKS:
        print(check().line())
