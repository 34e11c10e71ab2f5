"""Command-line interface: ``padic-invariant <command> [options]``.

Exit codes: 0 success, 2 usage error, 3 singular point, 4 verification
failure, 5 internal inconsistency. Every error path writes exactly one line
``error[<code>]: <message>`` to stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import warnings
from fractions import Fraction
from typing import List, Sequence

from .bernoulli_bridge import (
    bernoulli_numbers,
    bernoulli_polynomial,
    compare_relations_with_published,
    generate_bernoulli_poly_relation,
    generate_bernoulli_relation,
    relation_partial_valuations,
    volkenborn_approx,
)
from .bernoulli_bridge import volkenborn_trace as _volkenborn_trace
from .errors import DivisionByZeroPolynomial, InconsistencyError, NonExactDivision, SingularPoint
from .invariant_engine import (
    PolynomialTables,
    S_closed,
    S_direct,
    S_via_recurrence,
    check_summation_identity,
    compare_with_published_tables,
)
from .padic_core import INF, Prime, ValuationTrace, format_valuation
from .polyring import format_rational, parse_rational
from .series_verify import DomainWarning, in_convergence_set, invariant_partial_sum, valuation_trace

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SINGULAR = 3
EXIT_VERIFY_FAILED = 4
EXIT_INCONSISTENT = 5

K_MAX_CEILING = 24


class UsageError(Exception):
    code = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _prime(text: str) -> Prime:
    try:
        return Prime(int(text))
    except (TypeError, ValueError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _common(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="padic-invariant",
        description="Exact p-adic invariant sums of central-binomial series.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("polys", help="generate U_k and A_{k-1} tables", allow_abbrev=False)
    p.add_argument("--k", type=_positive_int, required=True, help=f"largest k (at most {K_MAX_CEILING})")
    _common(p)

    p = sub.add_parser("verify", help="check the finite summation identity", allow_abbrev=False)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--N", type=_positive_int, required=True, help="check N = 1..N")
    p.add_argument("--x", type=_rational, help="also check numerically at this rational")
    _common(p)

    p = sub.add_parser("series", help="valuation trace of the invariant partial sums", allow_abbrev=False)
    p.add_argument("--k", type=_positive_int, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.add_argument("--p", type=_prime, required=True)
    p.add_argument("--N", type=_positive_int, required=True, help="trace N = 1..N")
    _common(p, ("text", "json", "csv"))

    b = sub.add_parser("bernoulli", help="Bernoulli numbers, polynomials and relations", allow_abbrev=False)
    bsub = b.add_subparsers(dest="what", required=True, parser_class=_Parser)
    q = bsub.add_parser("numbers", allow_abbrev=False)
    q.add_argument("--n", type=_nonneg_int, required=True)
    _common(q)
    q = bsub.add_parser("poly", allow_abbrev=False)
    q.add_argument("--n", type=_nonneg_int, required=True)
    _common(q)
    for name in ("relation", "poly-relation"):
        q = bsub.add_parser(name, allow_abbrev=False)
        q.add_argument("--k", type=_positive_int, required=True)
        _common(q)
    q = bsub.add_parser("relation-trace", allow_abbrev=False)
    q.add_argument("--k", type=_positive_int, required=True)
    q.add_argument("--p", type=_prime, required=True)
    q.add_argument("--N", type=_positive_int, required=True)
    _common(q, ("text", "json", "csv"))
    q = bsub.add_parser("volkenborn", allow_abbrev=False)
    q.add_argument("--n", type=_nonneg_int, required=True)
    q.add_argument("--p", type=_prime, required=True)
    q.add_argument("--m", type=_positive_int, required=True)
    _common(q, ("text", "json", "csv"))

    p = sub.add_parser("selfcheck", help="run the full verification suite", allow_abbrev=False)
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    _common(p)
    return parser


# -- rendering -----------------------------------------------------------

def _dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def trace_to_json(trace: ValuationTrace) -> dict:
    return {
        "p": trace.p,
        "warnings": list(trace.warnings),
        "entries": [
            {
                trace.index_name: e.index,
                trace.value_name: format_rational(e.value, json_style=True),
                "valuation": e.valuation if e.valuation is not INF else "inf",
            }
            for e in trace
        ],
    }


def trace_to_csv(trace: ValuationTrace) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([trace.index_name, trace.value_name, "valuation"])
    for e in trace:
        w.writerow([e.index, format_rational(e.value, json_style=True), format_valuation(e.valuation)])
    return buf.getvalue()


def trace_to_text(trace: ValuationTrace) -> str:
    lines = [f"{trace.index_name}\t{trace.value_name}\tv_{trace.p}"]
    for e in trace:
        lines.append(f"{e.index}\t{format_rational(e.value)}\t{format_valuation(e.valuation)}")
    return "\n".join(lines) + "\n"


def _render_trace(trace: ValuationTrace, fmt: str, header: dict, header_text: List[str]) -> str:
    if fmt == "csv":
        return trace_to_csv(trace)
    if fmt == "json":
        return _dumps({**header, **trace_to_json(trace)})
    lines = header_text + [f"warning: {w}" for w in trace.warnings]
    return "\n".join(lines) + "\n" + trace_to_text(trace)


# -- commands ------------------------------------------------------------

def cmd_polys(args) -> tuple[str, int]:
    if args.k > K_MAX_CEILING:
        raise UsageError(f"--k must be at most {K_MAX_CEILING}")
    tables = PolynomialTables()
    report = compare_with_published_tables(tables, args.k)
    if args.format == "json":
        out = {
            "k_max": args.k,
            "U": [{"k": k, "text": tables.U(k).to_text(), "coefficients": tables.U(k).to_json()}
                  for k in range(1, args.k + 1)],
            "A": [{"k": k, "index": k - 1, "text": tables.A(k).to_text(), "coefficients": tables.A(k).to_json()}
                  for k in range(1, args.k + 1)],
            "comparison": report,
        }
        return _dumps(out), EXIT_OK
    lines = []
    for k in range(1, args.k + 1):
        lines.append(f"U_{k}(x) = {tables.U(k)}")
        lines.append(f"A_{k - 1}(n,x) = {tables.A(k)}")
    lines.append("")
    lines.append("comparison with published values:")
    for r in report:
        line = f"  {r['quantity']}: {r['status']}"
        if r["status"] == "mismatch":
            line += f" (published {r['published_value']}; generated {r['generated_value']})"
        lines.append(line)
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    tables = PolynomialTables()
    rows = []
    for N in range(1, args.N + 1):
        res = check_summation_identity(args.k, N, tables)
        row = {"k": args.k, "N": N, "symbolic": "pass" if res.ok else "fail",
               "residual": res.residual.to_text()}
        if args.x is not None:
            x = args.x
            d = S_direct(args.k, N, x)
            ok = d == S_via_recurrence(args.k, N, x) == S_closed(args.k, N, x, tables)
            invariant_partial_sum(args.k, x, N, tables)
            row["numeric"] = "pass" if ok else "fail"
        row["status"] = "pass" if all(row[c] == "pass" for c in ("symbolic", "numeric") if c in row) else "fail"
        rows.append(row)
    ok = all(r["status"] == "pass" for r in rows)
    if args.format == "json":
        out = {"k": args.k, "N_max": args.N,
               "x": None if args.x is None else format_rational(args.x, json_style=True),
               "passed": ok, "results": rows}
        text = _dumps(out)
    else:
        lines = [f"k={r['k']} N={r['N']} " + " ".join(
            f"{c}={r[c]}" for c in ("symbolic", "numeric") if c in r) for r in rows]
        lines.append("PASS" if ok else "FAIL")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_VERIFY_FAILED


def cmd_series(args) -> tuple[str, int]:
    point = in_convergence_set(args.x, args.p)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DomainWarning)
        trace = valuation_trace(args.k, args.x, args.p, args.N)
    if args.format == "csv":
        for w in trace.warnings:
            print(f"warning: {w}", file=sys.stderr)
    header = {
        "k": args.k,
        "x": format_rational(args.x, json_style=True),
        "in_domain": point.in_domain,
        "domain_failures": point.reasons,
    }
    verdict = "in convergence set" if point.in_domain else "outside convergence set (" + ", ".join(point.reasons) + ")"
    header_text = [f"k={args.k} x={format_rational(args.x)} p={args.p}: {verdict}"]
    return _render_trace(trace, args.format, header, header_text), EXIT_OK


def cmd_bernoulli(args) -> tuple[str, int]:
    fmt = args.format
    if args.what == "numbers":
        B = bernoulli_numbers(args.n)
        if fmt == "json":
            return _dumps({"n_max": args.n, "values": [format_rational(b, True) for b in B]}), EXIT_OK
        return "\n".join(f"B_{i} = {format_rational(b)}" for i, b in enumerate(B)) + "\n", EXIT_OK
    if args.what == "poly":
        poly = bernoulli_polynomial(args.n)
        if fmt == "json":
            return _dumps({"n": args.n, "text": poly.to_text(), "coefficients": poly.to_json()}), EXIT_OK
        return f"B_{args.n}(x) = {poly}\n", EXIT_OK
    if args.what in ("relation", "poly-relation"):
        tables = PolynomialTables()
        quantity = "number_relation" if args.what == "relation" else "polynomial_relation"
        rel = (generate_bernoulli_relation if args.what == "relation" else generate_bernoulli_poly_relation)(args.k, tables)
        cmp = [r for r in compare_relations_with_published(tables)
               if r["k"] == args.k and r["quantity"] == quantity] if args.k <= 6 else []
        if fmt == "json":
            out = rel.to_json()
            out["comparison"] = cmp[0] if cmp else None
            return _dumps(out), EXIT_OK
        lines = [rel.to_text()]
        if cmp:
            lines.append(f"published: {cmp[0]['status']}")
            if cmp[0]["status"] == "mismatch":
                lines.append(f"  published form: {cmp[0]['published_value']}")
        return "\n".join(lines) + "\n", EXIT_OK
    if args.what == "relation-trace":
        trace = relation_partial_valuations(args.k, args.p, args.N)
        return _render_trace(trace, fmt, {"k": args.k}, [f"k={args.k} p={args.p} (empirical)"]), EXIT_OK
    if args.what == "volkenborn":
        trace = _volkenborn_trace(args.n, args.p, args.m)
        approx = volkenborn_approx(args.n, args.p, args.m, method="faulhaber")
        B = bernoulli_numbers(args.n)[args.n]
        header = {"n": args.n, "m_max": args.m, "approximation": format_rational(approx, True),
                  "bernoulli": format_rational(B, True)}
        text = [f"n={args.n} p={args.p} m={args.m}: approximation {format_rational(approx)}, "
                f"B_{args.n} = {format_rational(B)}"]
        return _render_trace(trace, fmt, header, text), EXIT_OK
    raise UsageError(f"unknown bernoulli subcommand {args.what!r}")


def cmd_selfcheck(args) -> tuple[str, int]:
    from .selfcheck import run_selfcheck

    results = run_selfcheck()
    ok = all(r.passed for r in results)
    failed = [r.name for r in results if not r.passed]
    if args.json or args.format == "json":
        out = {
            "passed": ok,
            "total": len(results),
            "failed": failed,
            "results": [{"name": r.name, "status": "pass" if r.passed else "fail", "detail": r.detail}
                        for r in results],
        }
        text = _dumps(out)
    else:
        lines = [f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}" for r in results]
        if ok:
            lines.append(f"PASS ({len(results)} properties)")
        else:
            lines.append(f"FAIL ({len(failed)} of {len(results)} properties): {', '.join(failed)}")
        text = "\n".join(lines) + "\n"
    return text, EXIT_OK if ok else EXIT_VERIFY_FAILED


COMMANDS = {
    "polys": cmd_polys,
    "verify": cmd_verify,
    "series": cmd_series,
    "bernoulli": cmd_bernoulli,
    "selfcheck": cmd_selfcheck,
}


def _fail(code: str, message: str, status: int) -> int:
    message = " ".join(str(message).split())
    print(f"error[{code}]: {message}", file=sys.stderr)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, status = COMMANDS[args.command](args)
    except UsageError as exc:
        return _fail(UsageError.code, exc, EXIT_USAGE)
    except SingularPoint as exc:
        return _fail(SingularPoint.code, exc, EXIT_SINGULAR)
    except (NonExactDivision, DivisionByZeroPolynomial, InconsistencyError) as exc:
        return _fail(exc.code, exc, EXIT_INCONSISTENT)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
