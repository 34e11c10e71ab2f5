"""Companion polynomials ``U_k(x)`` and remainders ``A_{k-1}(N, x)``.

For every ``k >= 1`` and ``N >= 1`` the finite identity

    sum_{n<N} C(2n, n) [n^k (4x-1)^k + U_k(x)] x^n = C(2N, N) x^N A_{k-1}(N, x)

holds exactly. Both families are generated from their linear recurrences by
isolating the top term, which always appears with factor ``(4x - 1)``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import Dict, List, NamedTuple

from .errors import SingularPoint
from .padic_core import val_int
from .polyring import BiPolynomial, NPolynomial, Polynomial
from .published import PUBLISHED_K_MAX, published_A, published_U

__all__ = [
    "PolynomialTables",
    "ResidualCheck",
    "S_closed",
    "S_direct",
    "S_via_recurrence",
    "compute_A",
    "compute_U",
    "check_regular",
    "check_summation_identity",
    "compare_with_published_tables",
]

X = Polynomial.variable_power(1)
N_VAR = NPolynomial.variable_power(1)
FOUR_X_MINUS_ONE = Polynomial([-1, 4])
QUARTER = Fraction(1, 4)


class ResidualCheck(NamedTuple):
    ok: bool
    residual: object


def check_regular(x: Fraction) -> None:
    if x == QUARTER:
        raise SingularPoint("x = 1/4 is excluded: the recurrence divides by 4x - 1")


class PolynomialTables:
    """Memoized ``U_k`` and ``A_{k-1}`` tables, built bottom-up.

    Construction of new entries is serialized by a lock; entries are
    immutable once stored, so readers can share a table freely.
    """

    def __init__(self) -> None:
        self._u: Dict[int, Polynomial] = {}
        self._a: Dict[int, BiPolynomial] = {}
        self._f_pow: List[Polynomial] = [Polynomial.one()]
        self._lock = threading.RLock()

    def _f(self, e: int) -> Polynomial:
        while len(self._f_pow) <= e:
            self._f_pow.append(self._f_pow[-1] * FOUR_X_MINUS_ONE)
        return self._f_pow[e]

    def _recurrence_tail(self, k: int, prev: Dict[int, object], zero):
        """``-sum_u 4x C(k,u) F^(k-u) P_u + sum_v 2x C(k-1,v) F^(k-v) P_v`` over ``u, v < k``."""
        acc = zero
        for u in range(1, k):
            acc = acc - prev[u] * (self._f(k - u) * X).scale(4 * comb(k, u))
            acc = acc + prev[u] * (self._f(k - u) * X).scale(2 * comb(k - 1, u))
        return acc

    def U(self, k: int) -> Polynomial:
        """``U_k(x)``."""
        if k < 1:
            raise ValueError("U_k is defined for k >= 1")
        with self._lock:
            for j in range(len(self._u) + 1, k + 1):
                top = (self._f(j) * X).scale(2)
                num = top + self._recurrence_tail(j, self._u, Polynomial())
                self._u[j] = num.divide_exact(FOUR_X_MINUS_ONE)
            return self._u[k]

    def A(self, k: int) -> BiPolynomial:
        """``A_{k-1}(n, x)``: the remainder paired with ``U_k`` (note the index shift)."""
        if k < 1:
            raise ValueError("A_{k-1} is defined for k >= 1")
        with self._lock:
            for j in range(len(self._a) + 1, k + 1):
                top = BiPolynomial(self._f(j).coeffs) * (N_VAR ** j)
                num = top + self._recurrence_tail(j, self._a, BiPolynomial())
                self._a[j] = num.divide_exact(FOUR_X_MINUS_ONE)
            return self._a[k]

    def u_recurrence_residual(self, k: int) -> Polynomial:
        """Left side of the ``U`` recurrence with every generated ``U_u`` substituted."""
        acc = Polynomial()
        for u in range(1, k + 1):
            acc = acc + self.U(u) * (self._f(k - u) * X).scale(4 * comb(k, u))
        for v in range(1, k):
            acc = acc - self.U(v) * (self._f(k - v) * X).scale(2 * comb(k - 1, v))
        return acc - self.U(k) - (self._f(k) * X).scale(2)

    def a_recurrence_residual(self, k: int) -> BiPolynomial:
        acc = BiPolynomial()
        for u in range(1, k + 1):
            acc = acc + self.A(u) * (self._f(k - u) * X).scale(4 * comb(k, u))
        for v in range(1, k):
            acc = acc - self.A(v) * (self._f(k - v) * X).scale(2 * comb(k - 1, v))
        return acc - self.A(k) - BiPolynomial(self._f(k).coeffs) * (N_VAR ** k)

    def consistency_residual(self, k: int) -> Polynomial:
        """``U_k - (2x A_{k-1}(1, x) - A_{k-1}(0, x))``; zero for a correct table."""
        a = self.A(k)
        return self.U(k) - (X * a.eval_n(1)).scale(2) + a.eval_n(0)

    def denominator_offset(self, k: int, p: int) -> int:
        """Largest ``p``-adic valuation among the denominators of ``A_{k-1}``'s coefficients."""
        return max((val_int(c.denominator, p) for _, _, c in self.A(k).coefficients()), default=0)


def compute_U(k: int, tables: PolynomialTables | None = None) -> Polynomial:
    return (tables or PolynomialTables()).U(k)


def compute_A(k: int, tables: PolynomialTables | None = None) -> BiPolynomial:
    return (tables or PolynomialTables()).A(k)


def S_direct(k: int, N: int, x) -> Fraction:
    """``sum_{n<N} C(2n, n) n^k x^n`` by literal summation (``0**0 == 1``)."""
    if k < 0 or N < 1:
        raise ValueError("S_direct requires k >= 0 and N >= 1")
    x = Fraction(x)
    total = Fraction(0)
    xn = Fraction(1)
    for n in range(N):
        total += comb(2 * n, n) * n**k * xn
        xn *= x
    return total


def S_via_recurrence(k: int, N: int, x) -> Fraction:
    """``S_k(N, x)`` from ``S_0`` by forward substitution through the ``S`` recurrence."""
    if k < 1 or N < 1:
        raise ValueError("S_via_recurrence requires k >= 1 and N >= 1")
    x = Fraction(x)
    check_regular(x)
    boundary = comb(2 * N, N) * x**N
    S = [S_direct(0, N, x)]
    for j in range(1, k + 1):
        rhs = 2 * x * S[0] - boundary * N**j
        rhs += 4 * x * sum(comb(j, u) * S[u] for u in range(1, j))
        rhs -= 2 * x * sum(comb(j - 1, v) * S[v] for v in range(1, j))
        S.append(rhs / (1 - 4 * x))
    return S[k]


def S_closed(k: int, N: int, x, tables: PolynomialTables | None = None) -> Fraction:
    """``S_k(N, x)`` from ``U_k``, ``A_{k-1}`` and ``S_0``."""
    if k < 1 or N < 1:
        raise ValueError("S_closed requires k >= 1 and N >= 1")
    tables = tables or PolynomialTables()
    x = Fraction(x)
    check_regular(x)
    f_k = (4 * x - 1) ** k
    s0 = S_direct(0, N, x)
    boundary = comb(2 * N, N) * x**N * tables.A(k)(N, x)
    return (boundary - tables.U(k)(x) * s0) / f_k


def check_summation_identity(
    k: int, N: int, tables: PolynomialTables | None = None
) -> ResidualCheck:
    """Residual of the finite summation identity as a polynomial in ``x``."""
    if k < 1 or N < 1:
        raise ValueError("requires k >= 1 and N >= 1")
    tables = tables or PolynomialTables()
    f_k = FOUR_X_MINUS_ONE ** k
    u = tables.U(k)
    lhs = Polynomial()
    for n in range(N):
        lhs = lhs + ((f_k.scale(n**k) + u) * X ** n).scale(comb(2 * n, n))
    rhs = (X ** N * tables.A(k).eval_n(N)).scale(comb(2 * N, N))
    residual = lhs - rhs
    return ResidualCheck(residual.is_zero(), residual)


def compare_with_published_tables(
    tables: PolynomialTables | None = None, k_max: int | None = None
) -> List[dict]:
    """Entry-by-entry comparison of generated ``U_k``/``A_{k-1}`` against published values.

    Informational: a mismatch is reported, never corrected.
    """
    tables = tables or PolynomialTables()
    k_max = PUBLISHED_K_MAX if k_max is None else min(k_max, PUBLISHED_K_MAX)
    report = []
    for k in range(1, k_max + 1):
        for quantity, published, generated in (
            (f"U_{k}", published_U(k), tables.U(k)),
            (f"A_{k - 1}", published_A(k), tables.A(k)),
        ):
            report.append(
                {
                    "k": k,
                    "quantity": quantity,
                    "status": "match" if published == generated else "mismatch",
                    "published_value": published.to_text(),
                    "generated_value": generated.to_text(),
                }
            )
    return report
