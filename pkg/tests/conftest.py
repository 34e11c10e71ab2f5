import json
from fractions import Fraction
from pathlib import Path

import pytest

from padic_invariant.invariant_engine import PolynomialTables

FIXTURES = Path(__file__).parent / "fixtures"

_acceptance_lines = []


@pytest.fixture(scope="session")
def tables():
    return PolynomialTables()


@pytest.fixture(scope="session")
def traces():
    return json.loads((FIXTURES / "traces.json").read_text())


def factor_valuation(n: int, p: int) -> int:
    """Exponent of p in a positive integer by repeated division."""
    assert n > 0
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def frac(s: str) -> Fraction:
    return Fraction(s)


@pytest.fixture
def acceptance_report():
    def record(criterion: str, passed: bool, detail: str = "") -> None:
        _acceptance_lines.append(f"{criterion}: {'PASS' if passed else 'FAIL'} {detail}".rstrip())

    return record


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
