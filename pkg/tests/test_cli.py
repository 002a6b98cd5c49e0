import json
import subprocess
import sys

import pytest

from tgp.arrow import invariants, parse
from tgp.cli import main
from tgp.polynomial import MultiPoly

THETA = "(a+ b+ c+)(c+ b+ a+)"


@pytest.fixture
def graph_file(tmp_path):
    def make(text, name="g.arrow"):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return make


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_op_dual(capsys, graph_file):
    code, out, _ = run(capsys, "op", "dual", "--input", graph_file(THETA))
    assert code == 0
    inv = invariants(parse(out))
    assert (inv.v, inv.e, inv.f) == (3, 3, 2)


@pytest.mark.parametrize("op, edges, expected", [
    ("petrial", None, "(a+ a-)"),
    ("tau", "a", "(a+ a-)"),
    ("delete", "a", "()"),
    ("contract", "a", "()()"),
    ("delta", "a", "(a+)(a+)"),
])
def test_op_variants(capsys, graph_file, op, edges, expected):
    argv = ["op", op, "--input", graph_file("(a+ a+)")]
    if edges:
        argv += ["--edges", edges]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert invariants(parse(out)) == invariants(parse(expected))


def test_op_json_output(capsys, graph_file):
    code, out, _ = run(capsys, "op", "petrial", "--input", graph_file("(a+ a+)"), "--json")
    circle = json.loads(out)["circles"][0]
    assert code == 0 and {tok["edge"] for tok in circle} == {"a"}
    assert sorted(tok["sign"] for tok in circle) == [-1, 1]


def test_op_reads_json_input(capsys, graph_file):
    path = graph_file(json.dumps({"circles": [[{"edge": "a", "sign": 1}], [{"edge": "a", "sign": 1}]]}))
    code, out, _ = run(capsys, "op", "dual", "--input", path)
    assert code == 0 and invariants(parse(out)).f == 2


def test_poly_full_and_partial(capsys, graph_file):
    path = graph_file(THETA)
    code, out, _ = run(capsys, "poly", "penrose", "--input", path, "--at", "lambda=3")
    assert code == 0 and json.loads(out) == {"value": "6"}
    code, out, _ = run(capsys, "poly", "q", "--input", path, "--at", "alpha=1,beta=0,gamma=-1")
    poly = MultiPoly.from_json(json.loads(out))
    assert poly.vars == ("t",) and poly.eval({"t": 3}) == 6
    code, out, _ = run(capsys, "poly", "tutte", "--input", path)
    assert MultiPoly.from_json(json.loads(out)).eval({"x": 1, "y": 1}) == 3
    code, out, _ = run(capsys, "poly", "br", "--input", path, "--at", "x=2,y=1,z=1/2")
    assert json.loads(out) == {"value": "8"}
    code, out, _ = run(capsys, "poly", "chromatic-dual", "--input", path, "--at", "lambda=3")
    assert json.loads(out) == {"value": "6"}


def test_poly_unknown_variable(capsys, graph_file):
    code, _, err = run(capsys, "poly", "penrose", "--input", graph_file(THETA), "--at", "q=1")
    assert code == 2 and "unknown variable" in err


def test_kval(capsys, graph_file):
    code, out, _ = run(capsys, "kval", "--input", graph_file("(a+ a+)"), "--k", "2", "--class", "R-permissible",
                       "--weight", "b_weighted", "--b", "2")
    data = json.loads(out)
    assert code == 0 and data["value"] == "10" and data["valuations"] == 4
    assert data["histograms"]["tot"] == {"0": 2, "1": 2}
    code, out, _ = run(capsys, "kval", "--input", graph_file("(a+ a+)"), "--k", "2", "--weight", "general")
    assert MultiPoly.from_json(json.loads(out)["value"]).eval({"alpha": 1, "beta": 1, "gamma": 1}) == 8


def test_tensor_commands(capsys, graph_file):
    base = graph_file("(a+)(a+)", "base.arrow")
    code, out, _ = run(capsys, "tensor", "--base", base, "--double")
    assert code == 0 and invariants(parse(out)) == invariants(parse("(a+ b+)(b+ a+)"))
    pattern = graph_file(THETA, "h.arrow")
    code, out, _ = run(capsys, "tensor", "--base", base, "--pattern", pattern, "--edge", "a", "--phi", "a=3")
    assert code == 0 and set(parse(out).edges) == {"a.b", "a.c"}
    code, out, _ = run(capsys, "tensor-weights", "--pattern", pattern, "--edge", "a",
                       "--at", "alpha=1,beta=1,gamma=1,t=3")
    assert json.loads(out) == {"kappa": "7", "lambda": "2", "mu": "2"}


def test_tensor_errors(capsys, graph_file):
    pattern = graph_file(THETA, "h.arrow")
    code, _, err = run(capsys, "tensor-weights", "--pattern", pattern, "--edge", "a",
                       "--at", "alpha=1,beta=1,gamma=1,t=1")
    assert code == 2 and "singular" in err
    code, _, err = run(capsys, "tensor", "--base", pattern)
    assert code == 2


def test_verify_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0 and out.splitlines()[0].startswith("T4.4")
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--id", "T4.8,P4.7", "--json", str(report))
    assert code == 0 and out.count("PASS") == 2
    assert [r["id"] for r in json.loads(report.read_text())] == ["T4.8", "P4.7"]
    code, _, err = run(capsys, "verify", "--id", "X1")
    assert code == 2 and "X1" in err


def test_bad_input_exit_code(capsys, graph_file):
    code, _, err = run(capsys, "op", "dual", "--input", graph_file("(a+)(b+)"))
    assert code == 2 and err.startswith("tgp: error:")
    code, _, err = run(capsys, "op", "dual", "--input", graph_file("(a+ a)"))
    assert code == 2 and "position" in err


def test_module_entry_point_uses_stdin():
    proc = subprocess.run([sys.executable, "-m", "tgp", "poly", "penrose", "--at", "lambda=3"],
                          input=THETA, capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and json.loads(proc.stdout) == {"value": "6"}
