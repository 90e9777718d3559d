"""Command-line interface: catalog browsing, verification, solving, brackets, reports.

Exit codes: 0 success, 1 verification or golden mismatch, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from . import reference as ref
from . import tensors as T
from .bialgebra import SuperBialgebra
from .conventions import current
from .golden import KNOWN_ERRATA, R_MATRICES
from .registry import algebra, algebra_names, find_pair, pairs
from .superalgebra import AlgebraError, SuperAlgebra
from .supergroup import PreconditionError, fields_for, sklyanin
from .symkernel import SymbolicError, parse
from .yangbaxter import RMatrix, bi_r_matrix_check, classify_side, schouten, solve_coboundary

OK, MISMATCH, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _params(items) -> dict:
    out = {}
    for item in items or ():
        if "=" not in item:
            raise UsageError(f"--params expects k=v, got {item!r}")
        k, v = item.split("=", 1)
        try:
            out[k.strip()] = parse(v.strip())
        except SymbolicError as e:
            raise UsageError(f"bad value for {k}: {e}") from e
    return out


def _pair(name):
    try:
        return find_pair(name)
    except (KeyError, AlgebraError) as e:
        raise UsageError(f"unknown pair {name!r}") from e


def _algebra(name):
    try:
        return algebra(name)
    except AlgebraError as e:
        raise UsageError(str(e)) from e


def _md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        lines.append("| " + " | ".join(str(x).replace("|", "\\|") for x in r) + " |")
    return "\n".join(lines) + "\n"


def _emit(args, payload: dict, md: str):
    text = _dump(payload) if args.format == "json" else md
    if getattr(args, "out", None):
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{args.command}.{'json' if args.format == 'json' else 'md'}").write_text(text)
    else:
        sys.stdout.write(text)


# list ---------------------------------------------------------------------------------

def cmd_list(args) -> int:
    if args.pairs:
        rows = [p for p in pairs() if args.type is None or _type_str(p.type) == args.type.replace(" ", "")]
        payload = {"pairs": [{"name": p.name, "table": p.table, "type": _type_str(p.type),
                              "constraints": list(p.constraints),
                              "bind": {k: v for k, v in p.bind}} for p in rows]}
        md = _md_table(["pair", "table", "type", "constraints"],
                       [(p.name, p.table, _type_str(p.type), ", ".join(p.constraints)) for p in rows])
    else:
        algs = [algebra(n) for n in algebra_names()]
        if args.type:
            algs = [a for a in algs if _type_str(a.type) == args.type.replace(" ", "")]
        payload = {"algebras": [{"name": a.name, "type": _type_str(a.type),
                                 "constraints": list(a.constraints)} for a in algs]}
        md = _md_table(["algebra", "type", "constraints"],
                       [(a.name, _type_str(a.type), ", ".join(a.constraints)) for a in algs])
    _emit(args, payload, md)
    return OK


def _type_str(t) -> str:
    return f"({t[0]},{t[1]})"


# verify -------------------------------------------------------------------------------

def _load_target(args):
    name = args.pair or args.algebra or args.name
    if name is None:
        raise UsageError("verify needs a name, --pair, --algebra or a JSON file")
    if os.path.isfile(name):
        try:
            with open(name) as fh:
                d = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise UsageError(f"cannot read {name}: {e}") from e
        try:
            if "primal" in d and "dual" in d:
                return SuperBialgebra(SuperAlgebra.from_dict(d["primal"]), SuperAlgebra.from_dict(d["dual"]))
            return SuperAlgebra.from_dict(d)
        except AlgebraError as e:
            raise UsageError(str(e)) from e
    if args.algebra or (not args.pair and not name.startswith("(")):
        return _algebra(name)
    try:
        return SuperBialgebra.from_pair(find_pair(name))
    except (KeyError, AlgebraError):
        if args.pair:
            raise UsageError(f"unknown pair {name!r}")
        return _algebra(name)


def cmd_verify(args) -> int:
    target = _load_target(args)
    bind = _params(args.params)
    if bind:
        target = target.subs(bind)
    if isinstance(target, SuperBialgebra):
        rep = target.verify()
        payload = {"name": target.name, "kind": "pair", **rep}
        failures = sum(len(v) for v in rep.values())
    else:
        v = target.validate()
        payload = {"name": target.name, "kind": "algebra", "violations": v}
        failures = len(v)
    payload["ok"] = failures == 0
    md = f"# verify {payload['name']}\n\n{'pass' if failures == 0 else f'FAIL ({failures} violations)'}\n"
    _emit(args, payload, md)
    return OK if failures == 0 else MISMATCH


# solve --------------------------------------------------------------------------------

def solve_report(pair_name: str, side: str = "primal", bind=None, skew_reduce=False) -> dict:
    p = _pair(pair_name)
    b = SuperBialgebra.from_pair(p)
    bind = bind or {}
    bb = b.subs(bind) if bind else b
    sides = ("primal", "dual") if side == "both" else (side,)
    out = {"pair": p.name, "bind": {k: str(v) for k, v in sorted(bind.items())}, "sides": {}}
    alg_of = {"primal": bb.primal, "dual": bb.dual}
    for s in sides:
        sol = solve_coboundary(bb, s, skew=skew_reduce)
        entry = {"solutions": sol.to_dict()}
        if not sol.empty:
            r = sol.general()
            entry["general_r"] = T.format_wedges(r.coeffs, r.grading)
            entry["schouten"] = _wedges3(schouten(r, alg_of[s]), r.grading)
            try:
                res = classify_side(bb, s)
                entry["classification"] = res.to_dict() if res else None
            except AlgebraError as e:
                entry["classification"] = {"kind": "unclassified", "notes": [str(e)]}
        else:
            entry["classification"] = None
        out["sides"][s] = entry
    out["bi_r_matrix"] = bi_r_matrix_check(bb)["is_bi_r"]
    return out


def _is_number(text):
    try:
        float(text)
    except ValueError:
        return False
    return True


def _wedges3(t, g) -> str:
    try:
        terms = T.wedge_form(t, g)
    except ValueError:
        return T.format_tensor(t)
    return "; ".join(f"{c}:" + "^".join(str(i + 1) for i in idx) for c, idx in terms) or "0"


def _solve_md(rep) -> str:
    lines = [f"# {rep['pair']}", ""]
    for s, e in rep["sides"].items():
        sol = e["solutions"]
        lines.append(f"## {s}")
        if not sol["coboundary"]:
            req = [c for c in sol["requires_zero"] if not _is_number(c)]
            lines.append("not coboundary" + (f"; requires {', '.join(req)} = 0" if req else ""))
        else:
            lines += [f"- r = {e['general_r']}", f"- [[r,r]] = {e['schouten']}"]
            if sol["nonzero"]:
                lines.append("- assuming nonzero: " + ", ".join(sol["nonzero"]))
            if e["classification"]:
                lines.append(f"- kind: {e['classification']['kind']}")
        lines.append("")
    lines.append(f"bi-r-matrix: {rep['bi_r_matrix']}")
    return "\n".join(lines) + "\n"


def cmd_solve(args) -> int:
    name = args.pair or args.name
    if not name:
        raise UsageError("solve needs a pair")
    rep = solve_report(name, args.side or "both", _params(args.params), args.skew_reduce)
    _emit(args, rep, _solve_md(rep))
    return OK


# poisson ------------------------------------------------------------------------------

def _default_r(p, b, side, label):
    rows = [r for r in R_MATRICES if r["pair"] == p.name and r["side"] == side
            and (label is None or r["label"] == label)]
    if rows:
        row = rows[0]
        r = RMatrix.parse(row["r"], b.grading).subs({k: parse(v) for k, v in row["bind"].items()})
        if row["skew"]:
            r = r.subs({k: parse(v) for k, v in row["skew"].items()})
        return r, row["label"], {k: parse(v) for k, v in row["bind"].items()}
    sol = solve_coboundary(b, side, skew=True)
    if sol.empty:
        raise PreconditionError(f"the {side} side of {p.name} is not coboundary")
    return RMatrix(dict(sol.particular), b.grading, side), "skew particular solution", {}


def poisson_report(pair_name, side="primal", structure="full", bind=None, r_text=None, label=None) -> dict:
    p = _pair(pair_name)
    b = SuperBialgebra.from_pair(p)
    bind = dict(bind or {})
    if r_text is not None:
        r, label = RMatrix.parse(r_text, b.grading), "user"
    else:
        r, label, row_bind = _default_r(p, b, side, label)
        bind = {**row_bind, **bind}
    if bind:
        b, r = b.subs(bind), r.subs(bind)
    alg = b.primal if side == "primal" else b.dual
    sol = solve_coboundary(b, side)
    if sol.empty or not sol.contains(r):
        raise PreconditionError(f"r does not generate the {side} cocommutator of {p.name}")
    gp, fields = fields_for(alg, side == "dual")
    table = sklyanin(gp, fields, r, structure)
    return {"pair": p.name, "side": side, "structure": structure, "r": T.format_wedges(r.coeffs, r.grading), "r_label": label,
            "bind": {k: str(v) for k, v in sorted(bind.items())}, "brackets": table.to_list()}


def cmd_poisson(args) -> int:
    name = args.pair or args.name
    if not name:
        raise UsageError("poisson needs a pair")
    try:
        rep = poisson_report(name, args.side or "primal", args.structure or "full",
                             _params(args.params), args.r, args.label)
    except PreconditionError as e:
        sys.stderr.write(f"error: {e}\n")
        return MISMATCH
    md = f"# {rep['pair']} {rep['side']} {rep['structure']}\n\nr = {rep['r']}\n\n" + _md_table(
        ["mu", "nu", "{mu,nu}"], [(e["mu"], e["nu"], e["value"]) for e in rep["brackets"]])
    _emit(args, rep, md)
    return OK


# report-all ---------------------------------------------------------------------------

_TABLE_OF_TYPE = {(1, 1): 0, (2, 1): 1, (1, 2): 2}


def _r_table(subject):
    pair = subject.split(" ")[0]
    return 5 + _TABLE_OF_TYPE[tuple(find_pair(pair).type)]


def _field_table(subject):
    return 8 + _TABLE_OF_TYPE[tuple(algebra(subject.split(" ")[0]).type)]


def _kind_table(subject):
    return 5 + _TABLE_OF_TYPE[tuple(find_pair(subject.split(" {")[0]).type)]


def run_checks() -> dict:
    """All reference checks grouped by output file name."""
    groups: dict = {}

    def put(key, checks):
        groups.setdefault(key, []).extend(checks)

    for c in ref.check_r_matrices() + ref.check_schouten():
        put(f"table{_r_table(c.subject):02d}", [c])
    for c in ref.check_kinds():
        put(f"table{_kind_table(c.subject):02d}", [c])
    for c in ref.check_fields():
        put(f"table{_field_table(c.subject):02d}", [c])
    entries, axioms = ref.check_poisson()
    for c in entries:
        put(f"table{int(c.subject.split()[1]):02d}", [c])
    put("axioms", ref.check_catalog() + axioms)
    put("consistency", ref.check_roundtrip() + ref.check_double() + ref.check_linearization())
    return groups


def _erratum(check):
    for e in KNOWN_ERRATA:
        if e["criterion"] == check.criterion and e["match"] in check.subject:
            return e["note"]
    return None


def cmd_report_all(args) -> int:
    out = Path(args.out or "report")
    out.mkdir(parents=True, exist_ok=True)
    groups = run_checks()
    written, failures, rows = [], [], []
    for key in sorted(groups):
        checks = groups[key]
        recs = []
        for c in checks:
            d = c.to_dict()
            note = None if c.ok else _erratum(c)
            if note:
                d["known_erratum"] = note
            recs.append(d)
            if not c.ok:
                failures.append((key, c, note))
        path = out / f"{key}.json"
        path.write_text(_dump({"group": key, "checks": recs}))
        written.append(path.name)
        rows.append((key, len(checks), sum(not c.ok for c in checks)))
    unexplained = [f for f in failures if f[2] is None]
    md = ["# Reference report", "", _md_table(["group", "checks", "mismatches"], rows)]
    if failures:
        md += ["## Mismatches", ""]
        for key, c, note in failures:
            md.append(f"- [{key}] criterion {c.criterion}: {c.subject}: {c.detail}"
                      + (f" (known erratum: {note})" if note else ""))
    (out / "report.md").write_text("\n".join(md) + "\n")
    written.append("report.md")
    manifest = {
        "command": "report-all",
        "version": __version__,
        "inputs": {"golden": "embedded", "allow_known": bool(args.allow_known)},
        "params": {},
        "conventions_digest": current().digest(),
        "outputs": sorted(written),
        "summary": {"checks": sum(r[1] for r in rows), "mismatches": len(failures),
                    "unexplained": len(unexplained)},
    }
    (out / "manifest.json").write_text(_dump(manifest))
    for key, c, note in failures:
        sys.stderr.write(f"mismatch [{key}] {c.subject}: {c.detail}\n")
    bad = unexplained if args.allow_known else failures
    return MISMATCH if bad else OK


# entry point --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="superbialg", description="Low dimensional Lie super-bialgebras")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, name=True):
        if name:
            p.add_argument("name", nargs="?")
        p.add_argument("--format", choices=("json", "md"), default="json")
        p.add_argument("--out")
        return p

    p = common(sub.add_parser("list", help="list algebras or pairs"), name=False)
    p.add_argument("--pairs", action="store_true")
    p.add_argument("--type", help='grading type such as "(1,1)"')

    for cmd, hlp in (("verify", "check axioms"), ("solve", "solve the coboundary equation"),
                     ("poisson", "Sklyanin Poisson superbrackets")):
        p = common(sub.add_parser(cmd, help=hlp))
        p.add_argument("--pair")
        p.add_argument("--params", nargs="*", metavar="K=V")
        if cmd == "verify":
            p.add_argument("--algebra")
        if cmd in ("solve", "poisson"):
            p.add_argument("--side", choices=("primal", "dual") + (("both",) if cmd == "solve" else ()))
        if cmd == "solve":
            p.add_argument("--skew-reduce", action="store_true")
        if cmd == "poisson":
            p.add_argument("--structure", choices=("full", "L", "R"))
            p.add_argument("--r", help="r-matrix as a tensor string, e.g. '-1/4:2^2'")
            p.add_argument("--label", help="tabulated r row label, e.g. r2")

    p = sub.add_parser("report-all", help="regenerate every reference table")
    p.add_argument("--out", default="report")
    p.add_argument("--allow-known", action="store_true",
                   help="exit 0 when every mismatch is a documented erratum")
    return ap


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "solve": cmd_solve,
            "poisson": cmd_poisson, "report-all": cmd_report_all}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        sys.stderr.write(f"error: {e}\n")
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
