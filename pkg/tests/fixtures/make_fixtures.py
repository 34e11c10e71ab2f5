"""Regenerate the frozen regression traces in this directory.

Uses only routes that are independent of the package under test: direct
power sums for the Volkenborn approximations, sympy for Bernoulli numbers,
and the generating function of C(2n, n) for U_k.

    python tests/fixtures/make_fixtures.py
"""

import json
from fractions import Fraction
from math import comb
from pathlib import Path

import sympy as sp

HERE = Path(__file__).parent


def vp(q: Fraction, p: int):
    if q == 0:
        return "inf"
    v = 0
    a, b = q.numerator, q.denominator
    while a % p == 0:
        a //= p
        v += 1
    while b % p == 0:
        b //= p
        v -= 1
    return v


def bernoulli(n: int) -> Fraction:
    if n == 1:
        return Fraction(-1, 2)
    b = sp.bernoulli(n)
    return Fraction(int(b.p), int(b.q))


def u_poly(k: int):
    x = sp.symbols("x")
    g = (1 - 4 * x) ** sp.Rational(-1, 2)
    h = g
    for _ in range(k):
        h = sp.simplify(x * sp.diff(h, x))
    return sp.expand(sp.simplify(-((4 * x - 1) ** k) * h / g)), x


def volkenborn():
    out = {}
    for p in (2, 3, 5):
        for n in range(7):
            rows = []
            for m in range(1, 9):
                M = p**m
                diff = Fraction(sum(j**n for j in range(M)), M) - bernoulli(n)
                rows.append([m, f"{diff.numerator}/{diff.denominator}", vp(diff, p)])
            out[f"n={n},p={p}"] = rows
    return out


def series_trace(k: int, x: Fraction, p: int, n_max: int):
    u, xs = u_poly(k)
    ux = Fraction(str(u.subs(xs, sp.Rational(x.numerator, x.denominator))))
    rows, total = [], Fraction(0)
    for n in range(n_max):
        total += comb(2 * n, n) * (n**k * (4 * x - 1) ** k + ux) * x**n
        rows.append([n + 1, f"{total.numerator}/{total.denominator}", vp(total, p)])
    return rows


def relation_trace(k: int, p: int, n_max: int):
    u, xs = u_poly(k)
    n = sp.symbols("n")
    integrand = sp.Poly(sp.expand(n**k * (4 * xs - 1) ** k + u), xs)
    coeffs = {j: sp.lambdify(n, integrand.coeff_monomial(xs**j)) for j in range(k + 1)}
    rows, total = [], Fraction(0)
    for N in range(n_max):
        total += comb(2 * N, N) * sum(Fraction(int(coeffs[j](N))) * bernoulli(N + j) for j in coeffs)
        rows.append([N + 1, f"{total.numerator}/{total.denominator}", vp(total, p)])
    return rows


def main():
    data = {
        "volkenborn": volkenborn(),
        "series": {"k=1,x=2/7,p=2": series_trace(1, Fraction(2, 7), 2, 20)},
        "relation": {
            "k=1,p=2": relation_trace(1, 2, 30),
            "k=1,p=5": relation_trace(1, 5, 30),
            "k=2,p=3": relation_trace(2, 3, 30),
        },
    }
    (HERE / "traces.json").write_text(json.dumps(data, indent=1) + "\n")


if __name__ == "__main__":
    main()
