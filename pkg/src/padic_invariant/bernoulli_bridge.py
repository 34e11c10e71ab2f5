"""Bernoulli numbers and polynomials, Volkenborn sums, and the Bernoulli relations.

Integrating ``x^m`` against the Volkenborn measure gives ``B_m``, so the
invariant series turns into relations ``sum_n C(2n, n) sum_j c_j(n) B_{n+j} = 0``
where ``c_j(n)`` is the coefficient of ``x^j`` in ``n^k (4x-1)^k + U_k(x)``.
Using ``x^m = (B_{m+1}(x+1) - B_{m+1}(x)) / (m+1)`` instead gives the
polynomial form of the same relations.

Convention: ``B_1 = -1/2``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Dict, List, Tuple

from .errors import InconsistencyError
from .invariant_engine import FOUR_X_MINUS_ONE, PolynomialTables
from .padic_core import Prime, ValuationTrace
from .polyring import NPolynomial, Polynomial
from .published import (
    PUBLISHED_K_MAX,
    published_poly_relation,
    published_poly_relation_ks,
    published_relation,
    published_U,
)

__all__ = [
    "BernoulliPolyRelation",
    "BernoulliRelation",
    "BernoulliTable",
    "bernoulli_numbers",
    "bernoulli_polynomial",
    "check_difference_identity",
    "compare_relations_with_published",
    "generate_bernoulli_poly_relation",
    "generate_bernoulli_relation",
    "power_sum",
    "relation_partial_valuations",
    "volkenborn_approx",
    "volkenborn_trace",
]

# Above this many terms volkenborn_approx switches to the closed form.
DIRECT_SUM_LIMIT = 10**6


class BernoulliTable(Sequence):
    """Immutable ``B_0..B_{n_max}``."""

    def __init__(self, values: Sequence[Fraction]):
        self._values: Tuple[Fraction, ...] = tuple(values)

    @property
    def values(self) -> Tuple[Fraction, ...]:
        return self._values

    def __getitem__(self, i):
        return self._values[i]

    def __len__(self) -> int:
        return len(self._values)

    def recurrence_residual(self, m: int) -> Fraction:
        """``sum_{i<=m} C(m+1, i) B_i``, which is zero for ``m >= 1``."""
        return sum((comb(m + 1, i) * self._values[i] for i in range(m + 1)), Fraction(0))


def bernoulli_numbers(n_max: int) -> BernoulliTable:
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    B = [Fraction(1)]
    for m in range(1, n_max + 1):
        s = sum((comb(m + 1, i) * B[i] for i in range(m)), Fraction(0))
        B.append(-s / (m + 1))
    return BernoulliTable(B)


def bernoulli_polynomial(n: int, table: BernoulliTable | None = None) -> Polynomial:
    """``B_n(x) = sum_j C(n, j) B_j x^(n-j)``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if table is None or len(table) <= n:
        table = bernoulli_numbers(n)
    return Polynomial([comb(n, n - i) * table[n - i] for i in range(n + 1)])


def check_difference_identity(n: int, table: BernoulliTable | None = None) -> Tuple[bool, Polynomial]:
    """Residual of ``B_n(x+1) - B_n(x) - n x^(n-1)``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    b = bernoulli_polynomial(n, table)
    residual = b.shift(1) - b - Polynomial.monomial(n, n - 1)
    return residual.is_zero(), residual


def power_sum(n: int, M: int, table: BernoulliTable | None = None) -> int:
    """``sum_{j<M} j^n`` via Faulhaber: ``(B_{n+1}(M) - B_{n+1}) / (n+1)``."""
    if M <= 0:
        return 0
    b = bernoulli_polynomial(n + 1, table)
    value = (b(Fraction(M)) - b.coeffs[0]) / (n + 1)
    assert value.denominator == 1
    return value.numerator


def _power_sum_direct(n: int, M: int) -> int:
    return sum(j**n for j in range(M))


def volkenborn_approx(n: int, p, m: int, method: str = "auto") -> Fraction:
    """``p^-m sum_{j<p^m} j^n``; tends p-adically to ``B_n`` as ``m`` grows."""
    p = Prime(p)
    if n < 0 or m < 1:
        raise ValueError("requires n >= 0 and m >= 1")
    M = int(p) ** m
    if method == "auto":
        method = "direct" if M <= DIRECT_SUM_LIMIT else "faulhaber"
    if method == "direct":
        s = _power_sum_direct(n, M)
    elif method == "faulhaber":
        s = power_sum(n, M)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Fraction(s, M)


def volkenborn_trace(n: int, p, m_max: int, method: str = "faulhaber") -> ValuationTrace:
    """``(m, approx - B_n, valuation)`` for ``m = 1..m_max``."""
    p = Prime(p)
    target = bernoulli_numbers(n)[n]
    trace = ValuationTrace(int(p), index_name="m", value_name="difference")
    for m in range(1, m_max + 1):
        trace.append(m, volkenborn_approx(n, p, m, method) - target)
    return trace


def _integrand_coefficients(k: int, tables: PolynomialTables) -> Dict[int, NPolynomial]:
    """``{j: a_j(n)}`` with ``n^k (4x-1)^k + U_k(x) = sum_j a_j(n) x^j``."""
    f_k = FOUR_X_MINUS_ONE ** k
    u = tables.U(k)
    nk = NPolynomial.monomial(1, k)
    top = max(len(f_k), len(u))
    return {j: nk.scale(f_k[j]) + u[j] for j in range(top)}


@dataclass(frozen=True)
class BernoulliRelation:
    """``sum_n C(2n, n) sum_j c_j(n) B_{n+j} = 0``; ``terms`` holds ``(j, c_j)``."""

    k: int
    terms: Tuple[Tuple[int, NPolynomial], ...]

    def coefficient_map(self) -> Dict[int, NPolynomial]:
        return dict(self.terms)

    def term(self, n: int, bernoulli: BernoulliTable) -> Fraction:
        return comb(2 * n, n) * sum(
            (c(n) * bernoulli[n + j] for j, c in self.terms), Fraction(0)
        )

    def to_text(self) -> str:
        return _relation_text([(j, c, None) for j, c in self.terms])

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [{"offset": j, "n_polynomial": c.to_json()} for j, c in reversed(self.terms)],
        }


def _shift_label(j: int) -> str:
    return "n" if j == 0 else f"n+{j}"


def _relation_text(terms) -> str:
    """Render e.g. ``(4n+2)B_{n+1}-nB_n`` or its Bernoulli-difference form."""
    parts = []
    for j, c, den in reversed(terms):
        if den is None:
            factor = f"B_{{{_shift_label(j)}}}"
        else:
            m = _shift_label(j + 1)
            factor = f"/({den})*(B_{{{m}}}(x+1)-B_{{{m}}}(x))"
        parts.append(f"({c}){factor}")
    return "sum_n C(2n,n)[" + " + ".join(parts) + "] = 0"


def generate_bernoulli_relation(k: int, tables: PolynomialTables | None = None) -> BernoulliRelation:
    if k < 1:
        raise ValueError("k must be >= 1")
    coeffs = _integrand_coefficients(k, tables or PolynomialTables())
    return BernoulliRelation(k, tuple((j, c) for j, c in sorted(coeffs.items()) if c))


@dataclass(frozen=True)
class BernoulliPolyRelation:
    """``sum_n C(2n, n) sum_j [num_j(n) / (n+j+1)] (B_{n+j+1}(x+1) - B_{n+j+1}(x)) = 0``."""

    k: int
    terms: Tuple[Tuple[int, NPolynomial], ...]

    def denominator(self, j: int) -> NPolynomial:
        return NPolynomial([j + 1, 1])

    def reduce_to_numbers(self) -> BernoulliRelation:
        """Undo the difference substitution: each ``num_j/(n+j+1)`` times ``(n+j+1)``."""
        out = []
        for j, num in self.terms:
            d = self.denominator(j)
            out.append((j, (num * d).divide_exact(d)))
        return BernoulliRelation(self.k, tuple(out))

    def integrand_at(self, n: int, bernoulli: BernoulliTable | None = None) -> Polynomial:
        """The ``n``-th summand as a polynomial in ``x`` after expanding every difference."""
        top = n + max(j for j, _ in self.terms) + 1
        if bernoulli is None or len(bernoulli) <= top:
            bernoulli = bernoulli_numbers(top)
        acc = Polynomial()
        for j, num in self.terms:
            m = n + j + 1
            b = bernoulli_polynomial(m, bernoulli)
            acc = acc + (b.shift(1) - b).scale(num(n) / m)
        return acc

    def to_text(self) -> str:
        return _relation_text([(j, c, self.denominator(j)) for j, c in self.terms])

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "terms": [
                {"offset": j, "numerator": num.to_json(), "denominator": self.denominator(j).to_json()}
                for j, num in reversed(self.terms)
            ],
        }


def generate_bernoulli_poly_relation(
    k: int, tables: PolynomialTables | None = None, n_check: int = 8
) -> BernoulliPolyRelation:
    """Polynomial form of the relation, verified on ``n < n_check``.

    For each checked ``n`` the expanded Bernoulli differences must reproduce
    ``[n^k (4x-1)^k + U_k(x)] x^n`` exactly.
    """
    tables = tables or PolynomialTables()
    numbers = generate_bernoulli_relation(k, tables)
    rel = BernoulliPolyRelation(k, numbers.terms)
    if n_check:
        coeffs = _integrand_coefficients(k, tables)
        bern = bernoulli_numbers(n_check + max(coeffs) + 1)
        for n in range(n_check):
            expected = Polynomial([0] * n + [coeffs[j](n) for j in range(len(coeffs))])
            got = rel.integrand_at(n, bern)
            if got != expected:
                raise InconsistencyError(f"difference substitution failed for k={k}, n={n}")
    return rel


def relation_partial_valuations(
    k: int, p, N_max: int, tables: PolynomialTables | None = None,
    relation: BernoulliRelation | None = None,
) -> ValuationTrace:
    """Partial sums of the Bernoulli-number relation with their ``v_p``.

    Empirical only: no convergence is asserted.
    """
    p = Prime(p)
    rel = relation or generate_bernoulli_relation(k, tables)
    bern = bernoulli_numbers(N_max + max(j for j, _ in rel.terms))
    trace = ValuationTrace(int(p), index_name="N", value_name="partial_sum")
    total = Fraction(0)
    for N in range(1, N_max + 1):
        total += rel.term(N - 1, bern)
        trace.append(N, total)
    return trace


def compare_relations_with_published(tables: PolynomialTables | None = None) -> List[dict]:
    """Compare generated relations with published ones.

    ``consistent_with_published_U`` tells whether a published relation is the
    correct expansion of the published ``U_k``, which separates a wrong
    relation from a relation that merely inherits a wrong ``U_k``.
    """
    tables = tables or PolynomialTables()
    report = []
    for k in range(1, PUBLISHED_K_MAX + 1):
        generated = generate_bernoulli_relation(k, tables)
        published = published_relation(k)
        pub_rel = BernoulliRelation(k, tuple(published.items()))
        pub_u = published_U(k)
        expansion = {
            j: NPolynomial.monomial(1, k).scale((FOUR_X_MINUS_ONE ** k)[j]) + pub_u[j]
            for j in range(k + 1)
        }
        report.append(
            {
                "k": k,
                "quantity": "number_relation",
                "status": "match" if generated.coefficient_map() == published else "mismatch",
                "consistent_with_published_U": expansion == published,
                "published_value": pub_rel.to_text(),
                "generated_value": generated.to_text(),
            }
        )
    for k in sorted(published_poly_relation_ks()):
        generated = generate_bernoulli_poly_relation(k, tables)
        published = published_poly_relation(k)
        pub_rel = BernoulliPolyRelation(k, tuple(published.items()))
        report.append(
            {
                "k": k,
                "quantity": "polynomial_relation",
                "status": "match" if dict(generated.terms) == published else "mismatch",
                "published_value": pub_rel.to_text(),
                "generated_value": generated.to_text(),
            }
        )
    return report
