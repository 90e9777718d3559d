"""Acceptance criteria 1-9, one status line each.

A criterion prints PASS only if every check passes.  Mismatches that are
documented errata of the printed tables are reported as FAIL and the test is
marked xfail; any other mismatch fails the test.
"""
import filecmp
import json
from pathlib import Path

import pytest

from superbialg import SuperAlgebra, algebra, parse
from superbialg.golden import KNOWN_ERRATA

from conftest import ACCEPTANCE_LINES

NAMES = {
    "1": "axiom suite",
    "2": "r-matrix reproduction",
    "3": "Schouten reproduction",
    "4": "classification",
    "5": "invariant vector fields",
    "6": "Poisson tables",
    "7": "Poisson axioms",
    "8": "consistency round-trips",
    "9": "determinism",
}


def _line(crit, ok, detail):
    text = f"criterion {crit} ({NAMES[crit]}): {'PASS' if ok else 'FAIL'} {detail}"
    ACCEPTANCE_LINES.append(text)
    print(text)


def _judge(crit, records, extra_ok=True, extra=""):
    bad = [r for r in records if not r["ok"]]
    unexplained = [r for r in bad if "known_erratum" not in r]
    ok = not bad and extra_ok
    detail = f"{len(records) - len(bad)}/{len(records)} checks" + (f", {len(bad)} documented errata" if bad else "")
    _line(crit, ok, detail + extra)
    assert not unexplained, "\n".join(f"{r['subject']}: {r['detail']}" for r in unexplained)
    assert extra_ok
    if bad:
        pytest.xfail(f"{len(bad)} mismatches, all documented errata of the printed tables")


def _mutants():
    E, O = 0, 1
    c = algebra("C^1_{1/2}")
    f = dict(c.f)
    f[(2, 0, 2)], f[(2, 2, 0)] = parse("1"), parse("-1")
    return [
        SuperAlgebra("anti", (E, O), {(1, 0, 1): 1, (1, 1, 0): 1}),
        SuperAlgebra.from_brackets("grade", (E, O), [(1, 2, 1, 1)]),
        SuperAlgebra.from_brackets("jacobi", (E, E, E), [(1, 2, 2, 1), (1, 3, 3, 1), (2, 3, 1, 1)]),
        SuperAlgebra("weight", c.grading, f),
        SuperAlgebra.from_brackets("odd coefficient", (E, O), [(1, 2, 2, parse("zeta"))]),
        SuperAlgebra.from_brackets("square", (E, O), [(2, 2, 2, 1)]),
    ]


def test_criterion_1_axioms(checks):
    failing_mutants = sum(bool(m.validate()) for m in _mutants())
    _judge("1", checks["1"], failing_mutants >= 5 and failing_mutants == len(_mutants()),
           f"; {failing_mutants} mutants rejected")


@pytest.mark.parametrize("crit", ["2", "3", "4", "5", "6", "7"])
def test_criteria_2_to_7(checks, crit):
    _judge(crit, checks[crit])


def test_criterion_8_round_trips(checks):
    recs = checks["8a"] + checks["8b"] + checks["8c"]
    assert len(checks["8c"]) == 2
    _judge("8", recs)


def test_criterion_9_determinism(reports):
    (a, pa), (b, pb) = reports
    assert pa.returncode == pb.returncode
    files = sorted(p.name for p in Path(a).iterdir())
    assert files == sorted(p.name for p in Path(b).iterdir())
    match, mismatch, errors = filecmp.cmpfiles(a, b, files, shallow=False)
    _line("9", not mismatch and not errors, f"{len(match)}/{len(files)} files byte-identical")
    assert not mismatch and not errors


def test_errata_are_not_stale(checks):
    failing = [r for recs in checks.values() for r in recs if not r["ok"]]
    for e in KNOWN_ERRATA:
        assert any(r["criterion"] == e["criterion"] and e["match"] in r["subject"] for r in failing), e


def test_report_exit_codes(reports):
    (a, proc), _ = reports
    manifest = json.loads((Path(a) / "manifest.json").read_text())
    # documented errata still count as mismatches
    assert proc.returncode == (1 if manifest["summary"]["mismatches"] else 0)
    assert manifest["summary"]["unexplained"] == 0
