from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from padic_invariant.errors import DivisionByZeroPolynomial, NonExactDivision
from padic_invariant.polyring import (
    BiPolynomial,
    NPolynomial,
    Polynomial,
    format_rational,
    parse_rational,
)

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(small_q, max_size=6).map(Polynomial)
npolys = st.lists(small_q, max_size=4).map(NPolynomial)
bipolys = st.lists(npolys, max_size=4).map(BiPolynomial)


def test_trimming_and_degree():
    assert Polynomial([1, 2, 0, 0]) == Polynomial([1, 2])
    assert Polynomial([0, 0]).degree() is None
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial([5]).degree() == 0
    assert Polynomial([1, 2])[7] == 0


def test_text_rendering():
    p = Polynomial([1, -2, 3])
    assert p.to_text() == "3x^2-2x+1"
    assert str(Polynomial()) == "0"
    assert NPolynomial([0, -6, 4]).to_text() == "4n^2-6n"
    assert Polynomial([Fraction(-1, 2), 0, 1]).to_text() == "x^2-1/2"


def test_rational_formatting():
    assert format_rational(Fraction(3)) == "3"
    assert format_rational(Fraction(3), json_style=True) == "3/1"
    assert parse_rational("-3/6") == Fraction(-1, 2)
    assert parse_rational("7") == 7


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial()
    assert a * Polynomial.one() == a


@given(polys, polys)
def test_degree_law(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
    else:
        assert (a * b).degree() == a.degree() + b.degree()


@given(polys, polys, small_q)
def test_evaluation_homomorphism(a, b, x):
    assert (a * b)(x) == a(x) * b(x)
    assert (a + b)(x) == a(x) + b(x)


@given(polys, polys.filter(lambda q: not q.is_zero()))
def test_divmod_and_exact_division(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree() < b.degree()
    assert (a * b).divide_exact(b) == a


def test_non_exact_division():
    with pytest.raises(NonExactDivision):
        Polynomial([1, 1]).divide_exact(Polynomial([0, 2, 1]))
    with pytest.raises(DivisionByZeroPolynomial):
        Polynomial([1, 1]).divmod(Polynomial())


@given(polys, small_q, small_q)
def test_shift(a, s, x):
    assert a.shift(s)(x) == a(x + s)


@given(polys)
def test_text_and_json_round_trip(a):
    assert Polynomial.parse(a.to_text()) == a
    assert Polynomial.from_json(a.to_json()) == a


def test_json_is_strings():
    assert Polynomial([1, Fraction(-2, 3)]).to_json() == ["1/1", "-2/3"]


@given(bipolys, small_q, small_q)
def test_bipolynomial_evaluations_commute(a, n, x):
    assert a.eval_n(n)(x) == a.eval_x(x)(n) == a(n, x)


@settings(max_examples=60)
@given(bipolys, bipolys, small_q, small_q)
def test_bipolynomial_ring(a, b, n, x):
    assert (a * b)(n, x) == a(n, x) * b(n, x)
    assert (a - b)(n, x) == a(n, x) - b(n, x)


@given(bipolys)
def test_bipolynomial_round_trip(a):
    assert BiPolynomial.parse(a.to_text()) == a
    assert BiPolynomial.from_json(a.to_json()) == a


def test_bipolynomial_text():
    a = BiPolynomial([NPolynomial([0, 0, -1]), NPolynomial([0, -6, 4])])
    assert a.to_text() == "(4n^2-6n)x-n^2"
    assert a.x_degree() == 1 and a.n_degree() == 2
    assert BiPolynomial.parse("-(8n^3-10n^2)x+n") == BiPolynomial(
        [NPolynomial([0, 1]), NPolynomial([0, 0, 10, -8])]
    )


def test_bipolynomial_lifts_univariate():
    x = Polynomial([0, 1])
    n = NPolynomial([0, 1])
    assert (BiPolynomial.one() * x + n)(3, 5) == 8


def test_bipolynomial_scalar_division_only():
    a = BiPolynomial([NPolynomial([2, 4])])
    assert a.divide_exact(BiPolynomial([2])) == BiPolynomial([NPolynomial([1, 2])])
    with pytest.raises(TypeError):
        a.divide_exact(BiPolynomial([NPolynomial([0, 1])]))
