import csv
import io
import json
import subprocess
import sys

import pytest

from padic_invariant import published
from padic_invariant.cli import main
from padic_invariant.invariant_engine import PolynomialTables
from padic_invariant.selfcheck import check_tables


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def test_polys_text(capsys):
    status, out, _ = run(capsys, "polys", "--k", "3")
    assert status == 0
    assert "U_2(x) = -4x^2-2x" in out
    assert "A_1(n,x) = (4n^2-6n)x-n^2" in out
    assert "A_1: mismatch (published (4n^2-4n)x-n^2; generated (4n^2-6n)x-n^2)" in out


def test_polys_json(capsys):
    status, out, _ = run(capsys, "polys", "--k", "2", "--format", "json")
    data = json.loads(out)
    assert status == 0
    assert data["U"][0] == {"k": 1, "text": "2x", "coefficients": ["0/1", "2/1"]}
    assert data["A"][1]["index"] == 1
    assert {r["quantity"] for r in data["comparison"]} == {"U_1", "A_0", "U_2", "A_1"}


@pytest.mark.parametrize(
    "argv",
    [["polys"], ["polys", "--k", "0"], ["polys", "--k", "25"], ["series", "--k", "1", "--x", "2/7", "--p", "4", "--N", "3"],
     ["series", "--k", "1", "--x", "two", "--p", "2", "--N", "3"], ["bogus"], ["polys", "--kk", "2"],
     ["bernoulli", "volkenborn", "--n", "-1", "--p", "5", "--m", "2"]],
)
def test_usage_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ""
    assert err.startswith("error[usage]: ")
    assert err.count("\n") == 1


def test_singular_point(capsys):
    status, _, err = run(capsys, "verify", "--k", "2", "--N", "3", "--x", "1/4")
    assert status == 3
    assert err.startswith("error[singular-point]:")


def test_verify(capsys):
    status, out, _ = run(capsys, "verify", "--k", "3", "--N", "4", "--x=-2/3")
    assert status == 0
    assert out.splitlines()[-1] == "PASS"
    status, out, _ = run(capsys, "verify", "--k", "2", "--N", "3", "--format", "json")
    data = json.loads(out)
    assert data["passed"] and data["x"] is None and len(data["results"]) == 3


def test_series_csv_and_warning(capsys):
    status, out, err = run(capsys, "series", "--k", "1", "--x", "1/3", "--p", "2", "--N", "4", "--format", "csv")
    assert status == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["N", "partial_sum", "valuation"]
    assert len(rows) == 5
    assert "warning:" in err


def test_series_json(capsys, traces):
    status, out, _ = run(capsys, "series", "--k", "1", "--x", "2/7", "--p", "2", "--N", "20", "--format", "json")
    data = json.loads(out)
    assert data["in_domain"] is True and data["domain_failures"] == []
    expected = traces["series"]["k=1,x=2/7,p=2"]
    assert [[e["N"], e["partial_sum"], e["valuation"]] for e in data["entries"]] == expected


def test_bernoulli_numbers(capsys):
    status, out, _ = run(capsys, "bernoulli", "numbers", "--n", "12")
    assert status == 0
    assert out.splitlines()[12] == "B_12 = -691/2730"
    status, out, _ = run(capsys, "bernoulli", "numbers", "--n", "2", "--format", "json")
    assert json.loads(out) == {"n_max": 2, "values": ["1/1", "-1/2", "1/6"]}


def test_bernoulli_poly(capsys):
    _, out, _ = run(capsys, "bernoulli", "poly", "--n", "2")
    assert out == "B_2(x) = x^2-x+1/6\n"


def test_bernoulli_relation(capsys):
    _, out, _ = run(capsys, "bernoulli", "relation", "--k", "2")
    assert "published: mismatch" in out
    assert "published form:" in out
    _, out, _ = run(capsys, "bernoulli", "relation", "--k", "1", "--format", "json")
    data = json.loads(out)
    assert data["comparison"]["status"] == "match"
    _, out, _ = run(capsys, "bernoulli", "poly-relation", "--k", "7", "--format", "json")
    assert json.loads(out)["comparison"] is None


def test_relation_trace(capsys, traces):
    _, out, _ = run(capsys, "bernoulli", "relation-trace", "--k", "2", "--p", "3", "--N", "30", "--format", "json")
    data = json.loads(out)
    assert [[e["N"], e["partial_sum"], e["valuation"]] for e in data["entries"]] == traces["relation"]["k=2,p=3"]


def test_volkenborn(capsys, traces):
    _, out, _ = run(capsys, "bernoulli", "volkenborn", "--n", "4", "--p", "2", "--m", "8", "--format", "json")
    data = json.loads(out)
    assert data["bernoulli"] == "-1/30"
    got = [[e["m"], e["difference"], e["valuation"]] for e in data["entries"]]
    assert got == traces["volkenborn"]["n=4,p=2"]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "u.json"
    status, out, _ = run(capsys, "polys", "--k", "2", "--format", "json", "--out", str(target))
    assert status == 0 and out == ""
    assert json.loads(target.read_text())["k_max"] == 2


def test_output_deterministic(capsys):
    argv = ["polys", "--k", "6", "--format", "json"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_corrupted_fixture_named_failure(monkeypatch):
    monkeypatch.setitem(published._U, 2, [0, -2, -5])
    results = {r.name: r for r in check_tables(PolynomialTables())}
    assert not results["c2.published-U1-U3"].passed
    assert "-5x^2-2x" in results["c2.published-U1-U3"].detail
    assert results["c2.U-A-consistency"].passed


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "padic_invariant", "bernoulli", "poly", "--n", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout == "B_1(x) = x-1/2\n"


def test_selfcheck_json(capsys):
    status, out, _ = run(capsys, "selfcheck", "--json")
    data = json.loads(out)
    assert data["total"] == len(data["results"])
    assert status == (0 if data["passed"] else 4)
    assert all(r["status"] in ("pass", "fail") for r in data["results"])
