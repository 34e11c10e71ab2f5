"""One-shot verification suite behind ``padic-invariant selfcheck``.

Each check is a named property run at full acceptance scale. Results are
deterministic: no timings or other run-dependent data appear in them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Callable, Iterable, List, NamedTuple

from . import published
from .bernoulli_bridge import (
    bernoulli_numbers,
    check_difference_identity,
    compare_relations_with_published,
    generate_bernoulli_poly_relation,
    generate_bernoulli_relation,
    volkenborn_trace,
)
from .invariant_engine import (
    PolynomialTables,
    S_closed,
    S_direct,
    S_via_recurrence,
    check_summation_identity,
    compare_with_published_tables,
)
from .padic_core import INF, val_binomial_digits, val_binomial_kummer, val_int, val_rational
from .series_verify import running_minimum, valuation_trace

__all__ = ["CheckResult", "run_selfcheck", "CHECKS"]

VALUATION_PRIMES = (2, 3, 5, 7, 11)
SAMPLE_XS = tuple(
    Fraction(s) for s in ("1", "-1", "1/2", "-1/2", "2/3", "-2/3", "2/7", "5", "-3/4")
)


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _result(name: str, failures: List[str], ok_detail: str) -> CheckResult:
    if failures:
        shown = "; ".join(failures[:3])
        more = f" (+{len(failures) - 3} more)" if len(failures) > 3 else ""
        return CheckResult(name, False, shown + more)
    return CheckResult(name, True, ok_detail)


def check_valuation_oracles(tables: PolynomialTables) -> Iterable[CheckResult]:
    failures = []
    count = 0
    for n in range(301):
        row = [comb(n, m) for m in range(n + 1)]
        for p in VALUATION_PRIMES:
            for m in range(n + 1):
                a = val_binomial_digits(n, m, p)
                b = val_binomial_kummer(n, m, p)
                c = val_int(row[m], p)
                count += 1
                if not a == b == c:
                    failures.append(f"C({n},{m}) p={p}: digits={a} kummer={b} factor={c}")
    yield _result("c1.binomial-valuation-oracles", failures, f"{count} triples agree")


def check_tables(tables: PolynomialTables) -> Iterable[CheckResult]:
    for label, generated, expected in (
        ("c2.published-U1-U3", [tables.U(k) for k in (1, 2, 3)], [published.published_U(k) for k in (1, 2, 3)]),
        ("c2.published-A0-A1", [tables.A(k) for k in (1, 2)], [published.published_A(k) for k in (1, 2)]),
    ):
        failures = [
            f"generated {g} != published {e}" for g, e in zip(generated, expected) if g != e
        ]
        yield _result(label, failures, "coefficients match")
    failures = [f"k={k}: residual {tables.consistency_residual(k)}" for k in range(1, 9)
                if tables.consistency_residual(k)]
    yield _result("c2.U-A-consistency", failures, "k<=8")
    failures = [f"k={k}: A(0,x)={tables.A(k).eval_n(0)}" for k in range(1, 9) if tables.A(k).eval_n(0)]
    yield _result("c2.A-boundary-at-zero", failures, "k<=8")


def check_summation_identities(tables: PolynomialTables) -> Iterable[CheckResult]:
    failures = []
    for k in range(1, 7):
        for N in range(1, 13):
            res = check_summation_identity(k, N, tables)
            if not res.ok:
                failures.append(f"k={k} N={N}: residual {res.residual}")
    yield _result("c3.summation-identity-symbolic", failures, "k<=6, N<=12 residuals zero")


def check_triple_oracle(tables: PolynomialTables) -> Iterable[CheckResult]:
    failures = []
    for k in range(1, 6):
        for N in range(1, 31):
            for x in SAMPLE_XS:
                a = S_direct(k, N, x)
                b = S_via_recurrence(k, N, x)
                c = S_closed(k, N, x, tables)
                if not a == b == c:
                    failures.append(f"k={k} N={N} x={x}: {a}, {b}, {c}")
    yield _result("c4.partial-sum-triple-oracle", failures, "k<=5, N<=30, 9 sample points")


def check_padic_convergence(tables: PolynomialTables) -> Iterable[CheckResult]:
    failures = []
    for k in range(1, 5):
        for p in (2, 3, 5, 7):
            x = Fraction(p, p + 1)
            d = tables.denominator_offset(k, p)
            s = val_rational(x, p)
            trace = valuation_trace(k, x, p, 40, tables)
            for e in trace:
                if e.valuation < e.index * s - d:
                    failures.append(f"k={k} p={p} N={e.index}: v={e.valuation} < {e.index * s - d}")
            mins = running_minimum(trace.valuations())
            if any(b < a for a, b in zip(mins, mins[1:])):
                failures.append(f"k={k} p={p}: running minimum not monotone")
            if mins[-1] is not INF and mins[-1] < 40 * s - d:
                failures.append(f"k={k} p={p}: tail valuation {mins[-1]} below {40 * s - d}")
    yield _result("c5.padic-invariant-convergence", failures, "k<=4, p in {2,3,5,7}, N<=40")


def check_bernoulli(tables: PolynomialTables) -> Iterable[CheckResult]:
    B = bernoulli_numbers(50)
    failures = [f"m={m}" for m in range(1, 51) if B.recurrence_residual(m) != 0]
    if B[0] != 1:
        failures.append("B_0 != 1")
    yield _result("c6.bernoulli-recurrence", failures, "B_0..B_50")
    yield _result(
        "c6.bernoulli-B12",
        [] if B[12] == Fraction(-691, 2730) else [f"B_12 = {B[12]}"],
        "B_12 = -691/2730",
    )
    failures = [
        f"v_{p}(B_{n}) = {val_rational(B[n], p)}"
        for n in range(51) for p in VALUATION_PRIMES if val_rational(B[n], p) < -1
    ]
    yield _result("c6.bernoulli-valuation-bound", failures, "v_p(B_n) >= -1")
    failures = [f"n={n}" for n in range(1, 21) if not check_difference_identity(n, B)[0]]
    yield _result("c6.bernoulli-difference-identity", failures, "n<=20")


def check_volkenborn(tables: PolynomialTables) -> Iterable[CheckResult]:
    trace = volkenborn_trace(1, 5, 8)
    failures = [f"m={e.index}: v={e.valuation}" for e in trace if e.valuation != e.index]
    yield _result("c7.volkenborn-n1-p5", failures, "valuation equals m for m<=8")
    failures = []
    for p in (2, 3, 5):
        if volkenborn_trace(0, p, 8).valuations() != [INF] * 8:
            failures.append(f"n=0 p={p}: not exact")
        for n in range(1, 7):
            v = volkenborn_trace(n, p, 8).valuations()
            if not v[-1] > v[0]:
                failures.append(f"n={n} p={p}: v(8)={v[-1]} <= v(1)={v[0]}")
    yield _result("c7.volkenborn-growth", failures, "n<=6, p in {2,3,5}")


def check_relations(tables: PolynomialTables) -> Iterable[CheckResult]:
    report = compare_relations_with_published(tables)
    status = {(r["quantity"], r["k"]): r["status"] for r in report}
    failures = [] if status[("number_relation", 1)] == "match" else ["k=1 number relation"]
    yield _result("c8.relation-k1-published", failures, "k=1 matches")
    failures = [f"k={k}" for k in (1, 2) if status[("polynomial_relation", k)] != "match"]
    yield _result("c8.poly-relation-k1-k2-published", failures, "k=1,2 match")
    failures = []
    for k in range(1, 7):
        reduced = generate_bernoulli_poly_relation(k, tables).reduce_to_numbers()
        if reduced != generate_bernoulli_relation(k, tables):
            failures.append(f"k={k}")
    yield _result("c8.poly-relation-reduction", failures, "k<=6")
    flagged = []
    rel2 = next(r for r in report if r["quantity"] == "number_relation" and r["k"] == 2)
    a2 = next(r for r in compare_with_published_tables(tables, 3) if r["quantity"] == "A_2")
    for entry, label in ((rel2, "k=2 number relation"), (a2, "A_2")):
        if entry["status"] != "mismatch":
            flagged.append(f"published {label} not flagged")
    shown = "; ".join(
        f"{label}: published {e['published_value']} vs generated {e['generated_value']}"
        for e, label in ((rel2, "k=2 relation"), (a2, "A_2"))
    )
    yield _result("c8.published-inconsistencies-flagged", flagged, shown)


CHECKS: List[Callable[[PolynomialTables], Iterable[CheckResult]]] = [
    check_valuation_oracles,
    check_tables,
    check_summation_identities,
    check_triple_oracle,
    check_padic_convergence,
    check_bernoulli,
    check_volkenborn,
    check_relations,
]


def run_selfcheck(tables: PolynomialTables | None = None) -> List[CheckResult]:
    tables = tables or PolynomialTables()
    results: List[CheckResult] = []
    for check in CHECKS:
        results.extend(check(tables))
    return results
