import json
import os
import subprocess
import sys
from pathlib import Path

import pytest


def run_cli(*args, env=None, cwd=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([sys.executable, "-m", "superbialg", *args], capture_output=True,
                          text=True, env=full_env, cwd=cwd)


@pytest.fixture(scope="session")
def reports(tmp_path_factory):
    """Two independent report-all runs with different hash seeds."""
    base = tmp_path_factory.mktemp("reports")
    out = []
    for seed in ("1", "12345"):
        d = base / f"run{seed}"
        proc = run_cli("report-all", "--out", str(d), env={"PYTHONHASHSEED": seed})
        out.append((d, proc))
    return out


@pytest.fixture(scope="session")
def checks(reports):
    """All check records of the first report run, keyed by criterion."""
    d = reports[0][0]
    by: dict = {}
    for path in sorted(Path(d).glob("*.json")):
        if path.name == "manifest.json":
            continue
        for rec in json.loads(path.read_text())["checks"]:
            by.setdefault(rec["criterion"], []).append(rec)
    return by


ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
