import json

import pytest

from superbialg.cli import main
from conftest import run_cli


def run(capsys, *args):
    code = main(list(args))
    return code, capsys.readouterr()


def test_list_algebras(capsys):
    code, out = run(capsys, "list")
    names = {a["name"] for a in json.loads(out.out)["algebras"]}
    assert code == 0
    for n in ("B", "(A_{1,1}+A)", "C^1_p", "C^5_p", "(A_{1,1}+2A)^0", "(A_{1,1}+2A)^1", "(A_{1,1}+2A)^2"):
        assert n in names


def test_list_pairs(capsys):
    _, out = run(capsys, "list", "--pairs")
    assert len(json.loads(out.out)["pairs"]) == 74
    _, out = run(capsys, "list", "--pairs", "--type", "(1,1)")
    rows = json.loads(out.out)["pairs"]
    assert [r["name"] for r in rows] == ["((A_{1,1}+A),I_{(1,1)})", "(B,I_{(1,1)})",
                                         "(B,(A_{1,1}+A))", "(B,(A_{1,1}+A).i)"]


def test_verify(capsys):
    assert run(capsys, "verify", "B")[0] == 0
    assert run(capsys, "verify", "(B,(A_{1,1}+A))")[0] == 0
    assert run(capsys, "verify", "--pair", "(B,B)")[0] == 1
    assert run(capsys, "verify", "--pair", "(B,Z_9)")[0] == 2
    assert run(capsys, "verify", "nope")[0] == 2


def test_verify_corrupted_file(tmp_path, capsys):
    data = {"name": "broken C^1_{1/2}", "grading": ["even", "even", "odd"],
            "brackets": [{"i": 1, "j": 2, "k": 2, "coeff": "1"}, {"i": 1, "j": 3, "k": 3, "coeff": "1"},
                         {"i": 3, "j": 3, "k": 2, "coeff": "1"}]}
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(data))
    code, out = run(capsys, "verify", str(path))
    assert code == 1
    assert json.loads(out.out)["violations"]


def test_verify_with_params(capsys):
    assert run(capsys, "verify", "C^1_p", "--params", "p=3")[0] == 0
    assert run(capsys, "verify", "C^1_p", "--params", "p")[0] == 2


def test_solve(capsys):
    code, out = run(capsys, "solve", "(B,(A_{1,1}+A))")
    rep = json.loads(out.out)
    assert code == 0
    assert rep["sides"]["primal"]["general_r"] == "-1/4:2^2"
    assert rep["sides"]["primal"]["classification"]["kind"] == "triangular"
    assert rep["bi_r_matrix"] is True


def test_solve_generic_p(capsys):
    _, out = run(capsys, "solve", "(C^1_p,(2A_{1,1}+A))", "--skew-reduce")
    rep = json.loads(out.out)
    assert rep["sides"]["primal"]["general_r"] == "-1/(4*p):3^3"
    assert rep["sides"]["primal"]["solutions"]["nonzero"] == ["p", "p - 1"]
    assert rep["sides"]["dual"]["solutions"]["coboundary"] is False


def test_poisson(capsys):
    _, out = run(capsys, "poisson", "(B,(A_{1,1}+A))")
    rep = {(e["mu"], e["nu"]): e["value"] for e in json.loads(out.out)["brackets"]}
    assert rep[("x", "psi")] == "0"
    _, out = run(capsys, "poisson", "(B,(A_{1,1}+A))", "--side", "dual")
    rep = {(e["mu"], e["nu"]): e["value"] for e in json.loads(out.out)["brackets"]}
    assert rep[("x~", "psi~")] == "-psi~" and rep[("psi~", "psi~")] == "0"


def test_poisson_zero_r(capsys):
    _, out = run(capsys, "poisson", "(B,I_{(1,1)})")
    assert all(e["value"] == "0" for e in json.loads(out.out)["brackets"])


def test_poisson_precondition(capsys):
    code, out = run(capsys, "poisson", "(C^1_p,(2A_{1,1}+A))", "--side", "dual")
    assert code == 1 and "not coboundary" in out.err
    code, _ = run(capsys, "poisson", "(B,(A_{1,1}+A))", "--side", "dual", "--structure", "L")
    assert code == 1


def test_markdown_and_out_dir(tmp_path, capsys):
    code, _ = run(capsys, "solve", "(B,(A_{1,1}+A))", "--format", "md", "--out", str(tmp_path))
    assert code == 0
    assert (tmp_path / "solve.md").read_text().startswith("# (B,(A_{1,1}+A))")


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "solve", "(X,Y)")[0] == 2


def test_module_entry_point():
    proc = run_cli("list", "--pairs", "--type", "(1,1)", "--format", "md")
    assert proc.returncode == 0 and "(B,(A_{1,1}+A).i)" in proc.stdout


def test_flipped_convention_creates_mismatches(tmp_path):
    conv = tmp_path / "conv.json"
    conv.write_text(json.dumps({"cocommutator": []}))
    proc = run_cli("report-all", "--out", str(tmp_path / "out"), "--allow-known",
                   env={"SUPERBIALG_CONVENTIONS": str(conv)})
    assert proc.returncode == 1
    manifest = json.loads((tmp_path / "out" / "manifest.json").read_text())
    assert manifest["summary"]["unexplained"] > 5
