"""Partial sums of the invariant series and their p-adic valuation traces.

The series ``sum_n C(2n, n) [n^k (4x-1)^k + U_k(x)] x^n`` telescopes: its
``N``-th partial sum equals ``C(2N, N) x^N A_{k-1}(N, x)``, which tends to 0
p-adically whenever ``v_p(x) > 0``.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Mapping, NamedTuple

from .errors import InconsistencyError
from .invariant_engine import PolynomialTables, check_regular
from .padic_core import INF, Prime, Valuation, ValuationTrace, val_int, val_rational

__all__ = [
    "ConvergencePoint",
    "DomainWarning",
    "TermValuation",
    "combination_partial_sum",
    "in_convergence_set",
    "invariant_partial_sum",
    "running_minimum",
    "term_valuation_bound",
    "valuation_trace",
]


class DomainWarning(UserWarning):
    """The argument lies outside the known sufficient convergence set."""


@dataclass(frozen=True)
class ConvergencePoint:
    x: Fraction
    p: int
    in_domain: bool
    reasons: List[str] = field(default_factory=list)


def in_convergence_set(x, p) -> ConvergencePoint:
    """Check ``x = u/v`` (reduced) for ``|u| <= |v|``, ``p | u`` and ``p`` not dividing ``v``."""
    x = Fraction(x)
    p = Prime(p)
    u, v = x.numerator, x.denominator
    reasons = []
    if abs(u) > abs(v):
        reasons.append("numerator-exceeds-denominator")
    if u % p != 0:
        reasons.append("p-does-not-divide-numerator")
    if v % p == 0:
        reasons.append("p-divides-denominator")
    return ConvergencePoint(x, int(p), not reasons, reasons)


def _literal_terms(k: int, x: Fraction, tables: PolynomialTables):
    f_k = (4 * x - 1) ** k
    u = tables.U(k)(x)
    xn = Fraction(1)
    n = 0
    while True:
        yield comb(2 * n, n) * (n**k * f_k + u) * xn
        xn *= x
        n += 1


def _telescoped(k: int, x: Fraction, N: int, tables: PolynomialTables) -> Fraction:
    return comb(2 * N, N) * x**N * tables.A(k)(N, x)


def invariant_partial_sum(k: int, x, N: int, tables: PolynomialTables | None = None) -> Fraction:
    """Exact ``T_N``, computed literally and cross-checked against the telescoped form."""
    if k < 1 or N < 1:
        raise ValueError("invariant_partial_sum requires k >= 1 and N >= 1")
    x = Fraction(x)
    check_regular(x)
    tables = tables or PolynomialTables()
    terms = _literal_terms(k, x, tables)
    total = sum(next(terms) for _ in range(N))
    closed = _telescoped(k, x, N, tables)
    if total != closed:
        raise InconsistencyError(f"partial sum mismatch at k={k}, N={N}, x={x}: {total} != {closed}")
    return total


def valuation_trace(
    k: int, x, p, N_max: int, tables: PolynomialTables | None = None
) -> ValuationTrace:
    """``(N, T_N, v_p(T_N))`` for ``N = 1..N_max``.

    Outside the convergence set a :class:`DomainWarning` is issued and also
    recorded on the trace; the trace is still produced.
    """
    if k < 1 or N_max < 1:
        raise ValueError("valuation_trace requires k >= 1 and N_max >= 1")
    x = Fraction(x)
    p = Prime(p)
    check_regular(x)
    tables = tables or PolynomialTables()
    trace = ValuationTrace(int(p), index_name="N", value_name="partial_sum")
    point = in_convergence_set(x, p)
    if not point.in_domain:
        msg = f"x={x} is outside the convergence set for p={p}: {', '.join(point.reasons)}"
        trace.warnings.append(msg)
        warnings.warn(msg, DomainWarning, stacklevel=2)
    terms = _literal_terms(k, x, tables)
    total = Fraction(0)
    for N in range(1, N_max + 1):
        total += next(terms)
        closed = _telescoped(k, x, N, tables)
        if total != closed:
            raise InconsistencyError(f"partial sum mismatch at k={k}, N={N}, x={x}")
        trace.append(N, total)
    return trace


class TermValuation(NamedTuple):
    bound: Valuation
    exact: Valuation


def term_valuation_bound(n: int, x, p, k: int = 1, tables: PolynomialTables | None = None) -> TermValuation:
    """Lower bound ``n v_p(x) + v_p(C(2n, n))`` for the ``n``-th term, with its exact valuation.

    The bound ignores the polynomial factor, so it is only guaranteed when that
    factor has nonnegative valuation; in that case it is asserted.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    p = Prime(p)
    check_regular(x)
    tables = tables or PolynomialTables()
    vx = val_rational(x, p)
    if n == 0:
        bound: Valuation = 0
    else:
        bound = INF if vx is INF else n * vx + val_int(comb(2 * n, n), p)
    poly_part = n**k * (4 * x - 1) ** k + tables.U(k)(x)
    exact = val_rational(comb(2 * n, n) * poly_part * x**n, p)
    if val_rational(poly_part, p) >= 0 and not exact >= bound:
        raise InconsistencyError(f"term valuation {exact} below bound {bound}")
    return TermValuation(bound, exact)


def combination_partial_sum(
    weights: Mapping[int, object], x, N: int, tables: PolynomialTables | None = None
) -> Fraction:
    """Partial sum of ``sum_n C(2n, n) P(n, x) x^n`` with ``P = sum_j w_j [n^j (4x-1)^j + U_j(x)]``."""
    tables = tables or PolynomialTables()
    return sum(
        (Fraction(w) * invariant_partial_sum(j, x, N, tables) for j, w in weights.items()),
        Fraction(0),
    )


def running_minimum(valuations: List[Valuation]) -> List[Valuation]:
    """``min_{M >= N} v_M`` for each ``N`` over the traced range."""
    out: List[Valuation] = []
    cur: Valuation = INF
    for v in reversed(valuations):
        cur = v if v < cur else cur
        out.append(cur)
    return out[::-1]

