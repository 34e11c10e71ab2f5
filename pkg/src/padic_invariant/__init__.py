"""Exact p-adic summation of central-binomial series with invariant sums."""

from fractions import Fraction

from .errors import DivisionByZeroPolynomial, InconsistencyError, NonExactDivision, SingularPoint
from .padic_core import INF, Prime, ValuationTrace, norm, val_binomial_digits, val_binomial_kummer, val_factorial, val_rational
from .polyring import BiPolynomial, NPolynomial, Polynomial
from .invariant_engine import PolynomialTables, compute_A, compute_U

Rational = Fraction

__all__ = [
    "BiPolynomial",
    "DivisionByZeroPolynomial",
    "INF",
    "InconsistencyError",
    "NPolynomial",
    "NonExactDivision",
    "Polynomial",
    "PolynomialTables",
    "Prime",
    "Rational",
    "SingularPoint",
    "ValuationTrace",
    "compute_A",
    "compute_U",
    "norm",
    "val_binomial_digits",
    "val_binomial_kummer",
    "val_factorial",
    "val_rational",
]

__version__ = "0.1.0"
