from fractions import Fraction
from math import comb

import pytest
import sympy as sp

from padic_invariant.errors import SingularPoint
from padic_invariant.invariant_engine import (
    PolynomialTables,
    S_closed,
    S_direct,
    S_via_recurrence,
    check_summation_identity,
    compare_with_published_tables,
    compute_A,
    compute_U,
)
from padic_invariant.polyring import Polynomial

xs = sp.symbols("x")


def generating_function_U(k):
    """U_k from (1-4x)^(-1/2): the x d/dx operator applied k times."""
    g = (1 - 4 * xs) ** sp.Rational(-1, 2)
    h = g
    for _ in range(k):
        h = sp.simplify(xs * sp.diff(h, xs))
    expr = sp.expand(sp.simplify(-((4 * xs - 1) ** k) * h / g))
    poly = sp.Poly(expr, xs)
    return Polynomial([Fraction(int(c)) for c in reversed(poly.all_coeffs())])


@pytest.mark.parametrize("k", range(1, 7))
def test_U_matches_generating_function(tables, k):
    assert tables.U(k) == generating_function_U(k)


def test_U_low_order_values(tables):
    assert tables.U(1) == Polynomial([0, 2])
    assert tables.U(2) == Polynomial([0, -2, -4])
    assert tables.U(3) == Polynomial([0, 2, 20, 8])
    assert tables.U(4) == Polynomial([0, -2, -60, -144, -16])


def test_U5_U6_values(tables):
    # generated values; the previously published tables differ here
    assert tables.U(5) == Polynomial([0, 2, 148, 1032, 928, 32])
    assert tables.U(6) == Polynomial([0, -2, -332, -5168, -14032, -5728, -64])


def _brute_A(k, N):
    """T_N(x) / (C(2N,N) x^N) from the literal partial sum."""
    U = generating_function_U(k)
    f = Polynomial([-1, 4]) ** k
    total = Polynomial()
    for n in range(N):
        total = total + ((f.scale(n**k) + U) * Polynomial.monomial(1, n)).scale(comb(2 * n, n))
    denom = Polynomial.monomial(comb(2 * N, N), N)
    return total.divide_exact(denom)


@pytest.mark.parametrize("k", range(1, 6))
def test_A_matches_brute_force_quotient(tables, k):
    A = tables.A(k)
    for N in range(1, k + 4):
        assert A.eval_n(N) == _brute_A(k, N)


def test_A_values(tables):
    assert tables.A(1).to_text() == "n"
    assert tables.A(2).to_text() == "(4n^2-6n)x-n^2"
    assert tables.A(3).to_text() == "(16n^3-40n^2+28n)x^2+(-8n^3+10n^2+8n)x+n^3"


@pytest.mark.parametrize("k", range(1, 9))
def test_residuals_and_degrees(tables, k):
    assert tables.u_recurrence_residual(k).is_zero()
    assert tables.a_recurrence_residual(k).is_zero()
    assert tables.consistency_residual(k).is_zero()
    assert tables.A(k).eval_n(0).is_zero()
    assert tables.U(k).degree() == k
    assert tables.A(k).x_degree() == k - 1
    assert tables.A(k).n_degree() == k


def test_compute_wrappers():
    assert compute_U(2) == PolynomialTables().U(2)
    assert compute_A(2) == PolynomialTables().A(2)
    with pytest.raises(ValueError):
        compute_U(0)


@pytest.mark.parametrize(
    "k,N,x,expected",
    [(0, 3, Fraction(1, 2), Fraction(7, 2)), (1, 2, Fraction(1, 3), Fraction(2, 3)),
     (2, 3, 1, 26), (2, 3, Fraction(1, 2), 7)],
)
def test_S_direct_examples(k, N, x, expected):
    assert S_direct(k, N, x) == expected


@pytest.mark.parametrize("x", [Fraction(1), Fraction(-2, 3), Fraction(2, 7), Fraction(9, 5)])
def test_S_three_routes(tables, x):
    for k in range(1, 5):
        for N in (1, 2, 7, 15):
            assert S_direct(k, N, x) == S_via_recurrence(k, N, x) == S_closed(k, N, x, tables)


def test_singular_point():
    with pytest.raises(SingularPoint):
        S_closed(2, 3, Fraction(1, 4))
    with pytest.raises(SingularPoint):
        S_via_recurrence(1, 3, Fraction(1, 4))
    # the literal sum is fine there
    assert S_direct(1, 2, Fraction(1, 4)) == Fraction(1, 2)


def test_summation_identity_residual(tables):
    for k in (1, 3, 5):
        for N in (1, 4, 9):
            assert check_summation_identity(k, N, tables).ok


def test_published_comparison_report(tables):
    report = compare_with_published_tables(tables, 6)
    by_name = {r["quantity"]: r for r in report}
    assert {"k", "quantity", "status", "published_value", "generated_value"} <= set(report[0])
    for name in ("U_1", "U_2", "U_3", "U_4", "A_0"):
        assert by_name[name]["status"] == "match"
    for name in ("A_1", "A_2", "U_5", "U_6"):
        assert by_name[name]["status"] == "mismatch"
    assert by_name["A_1"]["published_value"] == "(4n^2-4n)x-n^2"
    assert by_name["A_1"]["generated_value"] == "(4n^2-6n)x-n^2"


def test_tables_memoized(tables):
    assert tables.U(4) is tables.U(4)
