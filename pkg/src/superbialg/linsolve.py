"""Exact Gaussian elimination over rational functions of the parameters."""
from __future__ import annotations

from dataclasses import dataclass, field

import sympy as sp


@dataclass
class LinearSolution:
    particular: dict            # unknown -> expr
    basis: list                 # list of {unknown: expr}, homogeneous solutions
    pivots: list = field(default_factory=list)        # parameter-dependent pivots assumed nonzero
    inconsistent: list = field(default_factory=list)  # reduced right-hand sides that must vanish

    @property
    def consistent(self) -> bool:
        return not self.inconsistent


def _weight(e) -> tuple:
    return (0 if e.is_Number else 1, sp.count_ops(e))


def solve(rows: list, rhs: list, unknowns: list) -> LinearSolution:
    """rows[r] maps unknown -> coefficient; solves sum rows[r][u] * u = rhs[r]."""
    idx = {u: n for n, u in enumerate(unknowns)}
    m = [[sp.Integer(0)] * len(unknowns) + [sp.sympify(b)] for b in rhs]
    for r, row in enumerate(rows):
        for u, c in row.items():
            m[r][idx[u]] = m[r][idx[u]] + sp.sympify(c)
    m = [[sp.cancel(x) for x in r] for r in m]
    ncol = len(unknowns)
    pivots, pivot_cols = [], []
    prow = 0
    for col in range(ncol):
        cands = [r for r in range(prow, len(m)) if m[r][col] != 0]
        if not cands:
            continue
        best = min(cands, key=lambda r: _weight(m[r][col]))
        m[prow], m[best] = m[best], m[prow]
        pv = m[prow][col]
        if not pv.is_Number:
            pivots.append(pv)
        m[prow] = [sp.cancel(x / pv) for x in m[prow]]
        for r in range(len(m)):
            if r != prow and m[r][col] != 0:
                fac = m[r][col]
                m[r] = [sp.cancel(x - fac * y) for x, y in zip(m[r], m[prow])]
        pivot_cols.append(col)
        prow += 1
        if prow == len(m):
            break
    inconsistent = [m[r][-1] for r in range(prow, len(m)) if m[r][-1] != 0]
    particular = {u: sp.Integer(0) for u in unknowns}
    for r, col in enumerate(pivot_cols):
        particular[unknowns[col]] = m[r][-1]
    free = [c for c in range(ncol) if c not in pivot_cols]
    basis = []
    for fc in free:
        vec = {u: sp.Integer(0) for u in unknowns}
        vec[unknowns[fc]] = sp.Integer(1)
        for r, col in enumerate(pivot_cols):
            vec[unknowns[col]] = sp.cancel(-m[r][fc])
        basis.append(vec)
    return LinearSolution(particular, basis, pivots, inconsistent)


def in_span(vec: dict, basis: list) -> bool:
    """Is vec a combination of the basis vectors (over the parameter field)?"""
    keys = sorted({k for b in basis for k in b} | set(vec), key=str)
    if all(sp.cancel(vec.get(k, 0)) == 0 for k in keys):
        return True
    if not basis:
        return False
    ts = list(range(len(basis)))
    rows = [{t: basis[t].get(k, 0) for t in ts} for k in keys]
    sol = solve(rows, [vec.get(k, 0) for k in keys], ts)
    return sol.consistent
