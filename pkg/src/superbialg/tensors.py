"""Sparse 2- and 3-tensors over a graded basis, with graded wedges.

Tensors are dicts {(i, j[, k]): Scalar}, 0-based, coefficient written on the left
of the basis product.  The text form is ``coef:i@j; coef:i^j^k`` with 1-based
indices, ``@`` a tensor product and ``^`` a graded wedge.
"""
from __future__ import annotations

import itertools

from .superalgebra import sgn
from .symkernel import Scalar, parse


def clean(t: dict) -> dict:
    return {k: v for k, v in t.items() if v}


def add(a: dict, b: dict, scale=1) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Scalar()) + v * scale
    return clean(out)


def scale(c, t: dict) -> dict:
    c = Scalar.coerce(c)
    return clean({k: c * v for k, v in t.items()})


def equal(a: dict, b: dict) -> bool:
    return not add(a, b, -1)


def wedge2(g, i, j) -> dict:
    """X_i ^ X_j = X_i (x) X_j - (-1)^{ij} X_j (x) X_i."""
    return add({(i, j): Scalar.one()}, {(j, i): Scalar.one()}, -sgn(g[i] * g[j]))


def wedge3(g, i, j, k) -> dict:
    gi, gj, gk = g[i], g[j], g[k]
    terms = [
        ((i, j, k), 1),
        ((j, k, i), sgn(gi * (gj + gk))),
        ((k, i, j), sgn(gk * (gi + gj))),
        ((i, k, j), -sgn(gj * gk)),
        ((j, i, k), -sgn(gi * gj)),
        ((k, j, i), -sgn(gi * gj + gi * gk + gj * gk)),
    ]
    out: dict = {}
    for key, s in terms:
        out[key] = out.get(key, Scalar()) + s
    return clean(out)


def parse_tensor(text: str, grading) -> dict:
    """Parse ``coef:i@j; coef:i^j`` (rank 2 or 3)."""
    out: dict = {}
    for part in text.split(";"):
        part = part.strip()
        if not part or part == "0":
            continue
        coef, _, basis = part.rpartition(":")
        coef = parse(coef) if coef.strip() else Scalar.one()
        if "^" in basis:
            idx = [int(x) - 1 for x in basis.split("^")]
            base = wedge2(grading, *idx) if len(idx) == 2 else wedge3(grading, *idx)
        else:
            idx = tuple(int(x) - 1 for x in basis.split("@"))
            base = {idx: Scalar.one()}
        out = add(out, scale(coef, base))
    return out


def format_tensor(t: dict) -> str:
    if not t:
        return "0"
    parts = []
    for key in sorted(t):
        parts.append(f"{t[key]}:" + "@".join(str(i + 1) for i in key))
    return "; ".join(parts)


def is_graded_skew(t: dict, g) -> bool:
    """r^{ji} = -(-1)^{ij} r^{ij} for the tensor r^{ij} X_i (x) X_j."""
    return not symmetric_part(t, g)


def symmetric_part(t: dict, g) -> dict:
    """Coefficients of r_12 + r_21, where r_21 = sum (-1)^{ij} r^{ij} X_j (x) X_i."""
    out = dict(t)
    for (i, j), v in t.items():
        out[(j, i)] = out.get((j, i), Scalar()) + v * sgn(g[i] * g[j])
    return clean(out)


def totally_antisymmetric(t: dict, g) -> bool:
    """Check that a 3-tensor is graded antisymmetric under adjacent swaps."""
    for (i, j, k), v in t.items():
        a = t.get((j, i, k)) or Scalar()
        if a + v * sgn(g[i] * g[j]):
            return False
        b = t.get((i, k, j)) or Scalar()
        if b + v * sgn(g[j] * g[k]):
            return False
    return True


def wedge_form(t: dict, g) -> list:
    """Express a graded-antisymmetric 3-tensor as (coef, (i, j, k)) wedge terms, i <= j <= k."""
    out = []
    rest = dict(t)
    for i, j, k in itertools.combinations_with_replacement(range(len(g)), 3):
        w = wedge3(g, i, j, k)
        if not w:
            continue
        # permutations of different multisets never overlap
        key = min(w)
        c = rest.get(key)
        if not c:
            continue
        coef = c / w[key]
        out.append((coef, (i, j, k)))
        rest = add(rest, scale(coef, w), -1)
    if rest:
        raise ValueError("tensor is not in the graded exterior cube")
    return out


def format_wedges(t: dict, g) -> str:
    """Rank-2 tensor as graded wedges plus a leftover symmetric part in ``@`` form."""
    parts, rest = [], dict(t)
    for i, j in itertools.combinations_with_replacement(range(len(g)), 2):
        w = wedge2(g, i, j)
        c = rest.get(min(w)) if w else None
        if not c:
            continue
        coef = c / w[min(w)]
        parts.append(f"{coef}:{i + 1}^{j + 1}")
        rest = add(rest, scale(coef, w), -1)
    sym = [f"{rest[k]}:{k[0] + 1}@{k[1] + 1}" for k in sorted(rest)]
    return "; ".join(parts + sym) or "0"
