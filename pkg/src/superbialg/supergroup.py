"""Invariant supervector fields and Sklyanin Poisson superbrackets.

Group elements are ordered products g = exp(x^1 X_1) ... exp(x^n X_n); the
Maurer-Cartan forms are obtained by transporting generators with adjoint
exponentials, so no faithful matrix representation is needed.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .conventions import current
from .superalgebra import SuperAlgebra, AlgebraError, sgn
from .symkernel import Scalar, declare, derive, identity, inverse, lookup, matrix_exponential, matmul, parse
from .yangbaxter import RMatrix, schouten

_EVEN = ("x", "y")
_ODD = ("psi", "chi")


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class GroupParameterization:
    alg: SuperAlgebra
    coordinates: tuple
    dual: bool = False

    @classmethod
    def standard(cls, alg: SuperAlgebra, dual: bool = False) -> "GroupParameterization":
        ev, od = iter(_EVEN), iter(_ODD)
        suffix = "~" if dual else ""
        coords = tuple(next(od if g else ev) + suffix for g in alg.grading)
        return cls(alg, coords, dual)

    @property
    def grading(self):
        return self.alg.grading

    @property
    def dim(self):
        return self.alg.dim


def _adjoint_exp(alg: SuperAlgebra, nu: int, coord: str, sign: int):
    """Ad of exp(sign * x^nu X_nu) acting on coefficient column vectors."""
    A = alg.ad_action(nu)
    if not alg.grading[nu]:
        return matrix_exponential([[a * sign for a in row] for row in A], coord)
    return ("odd", A, Scalar.symbol(coord) * sign)


def _apply(alg: SuperAlgebra, op, vec):
    if isinstance(op, tuple):
        _, A, u = op
        g = alg.grading
        out = list(vec)
        for k in range(alg.dim):
            for j in range(alg.dim):
                if A[k][j] and vec[j]:
                    # u X_nu passes the coefficient of X_j
                    out[k] = out[k] + u * vec[j] * A[k][j] * sgn(vec[j].grade())
        return out
    return [sum((op[k][j] * vec[j] for j in range(len(vec)) if op[k][j] and vec[j]), Scalar())
            for k in range(len(vec))]


def _transport(p: GroupParameterization, left: bool) -> list:
    """Row mu: coefficients c^k with g^{-1} dg (or dg g^{-1}) = sum dx^mu c^k X_k."""
    alg, n, g = p.alg, p.dim, p.grading
    half = Scalar.const("1/2")
    rows = []
    for mu in range(n):
        vec = [Scalar.one() if k == mu else Scalar() for k in range(n)]
        if g[mu]:
            u = Scalar.symbol(p.coordinates[mu])
            for k in range(n):
                f = alg.c(k, mu, mu)
                if f:
                    vec[k] = vec[k] + (-half if left else half) * u * f
        steps = range(mu + 1, n) if left else range(mu - 1, -1, -1)
        for nu in steps:
            vec = _apply(alg, _adjoint_exp(alg, nu, p.coordinates[nu], -1 if left else 1), vec)
        rows.append(vec)
    return rows


@dataclass
class MaurerCartanForms:
    L_l: list  # [mu][i]
    L_r: list  # [i][mu]
    R_l: list
    R_r: list


@dataclass
class InvariantFields:
    XL_l: list  # [j][nu]: component of d/dx^nu in the j-th left-derivative field
    XL_r: list  # [nu][j]
    XR_l: list
    XR_r: list


def _right_form(p, left_form):
    g, n = p.grading, p.dim
    return [[left_form[mu][i] * sgn(g[mu] * (g[mu] + g[i])) for mu in range(n)] for i in range(n)]


def maurer_cartan(p: GroupParameterization) -> MaurerCartanForms:
    g, n = p.grading, p.dim
    out = {}
    for name, left in (("L", True), ("R", False)):
        c = _transport(p, left)
        if p.dual:
            lf = c
        else:
            lf = [[c[mu][i] * sgn(g[i]) for i in range(n)] for mu in range(n)]
        out[name + "_l"] = lf
        out[name + "_r"] = _right_form(p, lf)
    return MaurerCartanForms(**out)


def invariant_fields(m: MaurerCartanForms, p: GroupParameterization) -> InvariantFields:
    conv = current()
    g = p.grading
    out = {}
    for name in ("L", "R"):
        out[f"X{name}_l"] = inverse(getattr(m, f"{name}_l"))
        xr = inverse(getattr(m, f"{name}_r"))
        if p.dual:
            xr = [[x * conv.sign("dual_right_field_column", j=g[j]) for j, x in enumerate(row)] for row in xr]
        out[f"X{name}_r"] = xr
    return InvariantFields(**out)


def fields_for(alg: SuperAlgebra, dual: bool = False):
    p = GroupParameterization.standard(alg, dual)
    return p, invariant_fields(maurer_cartan(p), p)


def duality_residual(m: MaurerCartanForms, f: InvariantFields) -> bool:
    n = len(m.L_l)
    ok = True
    for a, b in ((f.XL_l, m.L_l), (m.L_r, f.XL_r), (f.XR_l, m.R_l), (m.R_r, f.XR_r)):
        prod = matmul(a, b)
        ok &= all(prod[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))
    return ok


def parse_field(text: str, coordinates, side: str = "left") -> list:
    """Components of a vector field written with derivative tokens ``D<coord>``.

    ``side="left"`` reads ``c Dx`` (derivative acting to the right), ``side="right"``
    reads ``Dx c`` (derivative acting to the left); returns c per coordinate.
    """
    marks = {}
    for c in coordinates:
        marks[declare("D" + c, lookup(c).parity, "parameter")] = coordinates.index(c)
    even = {m.sym: idx for m, idx in marks.items() if not m.parity}
    s = parse(text)
    out = [Scalar() for _ in coordinates]
    for (mono, key), coef in s.terms.items():
        found = [n for n, m in enumerate(mono) if m in marks]
        if len(found) > 1:
            raise ValueError(f"product of derivatives in {text!r}")
        if found:
            pos = found[0]
            d = mono[pos]
            rest = mono[:pos] + mono[pos + 1:]
            crossed = mono[pos + 1:] if side == "left" else mono[:pos]
            sign = -1 if sum(m.parity for m in crossed) % 2 else 1
            if any(coef.has(e) for e in even):
                raise ValueError(f"product of derivatives in {text!r}")
            out[marks[d]] = out[marks[d]] + Scalar({(rest, key): coef * sign})
            continue
        if coef.subs({e: 0 for e in even}) != 0:
            raise ValueError(f"term without a derivative in {text!r}")
        for e, idx in even.items():
            c = coef.diff(e)
            if c != 0:
                out[idx] = out[idx] + Scalar({(mono, key): c})
    return out


def field_rows(f: InvariantFields, family: str) -> list:
    """Per field j, its coordinate components, for family L_l, L_r, R_l or R_r."""
    m = getattr(f, "X" + family)
    n = len(m)
    if family.endswith("_l"):
        return [list(m[j]) for j in range(n)]
    return [[m[nu][j] for nu in range(n)] for j in range(n)]


# Poisson brackets -----------------------------------------------------------------

@dataclass
class PoissonTable:
    coordinates: tuple
    grading: tuple
    entries: list  # [mu][nu] Scalars

    def __getitem__(self, key):
        mu, nu = key
        if isinstance(mu, str):
            mu = self.coordinates.index(mu)
        if isinstance(nu, str):
            nu = self.coordinates.index(nu)
        return self.entries[mu][nu]

    def __sub__(self, other):
        return PoissonTable(self.coordinates, self.grading,
                            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def is_zero(self):
        return all(not x for r in self.entries for x in r)

    def to_list(self):
        n = len(self.coordinates)
        return [{"mu": self.coordinates[a], "nu": self.coordinates[b], "value": str(self.entries[a][b])}
                for a in range(n) for b in range(a, n)]


def _contract(p: GroupParameterization, Xr, r: RMatrix, Xl) -> PoissonTable:
    conv = current()
    g, n = p.grading, p.dim
    ent = []
    for mu in range(n):
        row = []
        for nu in range(n):
            acc = Scalar()
            for (i, j), c in r.coeffs.items():
                a, b = Xr[mu][i], Xl[j][nu]
                if not a or not b:
                    continue
                # odd coefficients need no reordering sign by default
                t = a * c * b * conv.sign("odd_coefficient", c=c.parity or 0, i=g[i], j=g[j])
                if p.dual:
                    t = t * conv.sign("dual_bracket_prefactor", i=g[i])
                acc = acc + t
            row.append(acc)
        ent.append(row)
    return PoissonTable(p.coordinates, g, ent)


def sklyanin(p: GroupParameterization, fields: InvariantFields, r: RMatrix, structure: str = "full") -> PoissonTable:
    if r.symmetric_part():
        raise PreconditionError("r is not graded skew-symmetric")
    if structure not in ("full", "L", "R"):
        raise ValueError("structure must be full, L or R")
    if structure != "full" and schouten(r, p.alg):
        raise PreconditionError("[[r,r]] != 0: the L and R structures need a solution of the CYBE")
    left = _contract(p, fields.XL_r, r, fields.XL_l)
    right = _contract(p, fields.XR_r, r, fields.XR_l)
    return {"full": left - right, "L": left, "R": right}[structure]


def bracket(t: PoissonTable, f: Scalar, h: Scalar) -> Scalar:
    """{f, h} = f <-d_mu P^{mu nu} d->_nu h."""
    acc = Scalar()
    for mu, a in enumerate(t.coordinates):
        fa = derive(f, a, "right")
        if not fa:
            continue
        for nu, b in enumerate(t.coordinates):
            hb = derive(h, b, "left")
            if hb and t.entries[mu][nu]:
                acc = acc + fa * t.entries[mu][nu] * hb
    return acc


def poisson_axiom_check(t: PoissonTable) -> list:
    """Violations of graded antisymmetry and the graded Jacobi identity on coordinates."""
    g, xs = t.grading, t.coordinates
    n = len(xs)
    bad = []
    for a in range(n):
        for b in range(a, n):
            if t.entries[a][b] + t.entries[b][a] * sgn(g[a] * g[b]):
                bad.append(f"antisymmetry fails for {{{xs[a]}, {xs[b]}}}")
    coords = [Scalar.symbol(x) for x in xs]
    for a, b, c in itertools.combinations_with_replacement(range(n), 3):
        A, B, C = coords[a], coords[b], coords[c]
        total = (bracket(t, A, bracket(t, B, C)) * sgn(g[a] * g[c])
                 + bracket(t, B, bracket(t, C, A)) * sgn(g[b] * g[a])
                 + bracket(t, C, bracket(t, A, B)) * sgn(g[c] * g[b]))
        if total:
            bad.append(f"Jacobi fails for ({xs[a]}, {xs[b]}, {xs[c]}): {total}")
    return bad


def linearization(t: PoissonTable) -> dict:
    """First-order coefficients: {x^mu, x^nu} ~ sum_k L^{mu nu}_k x^k at the origin."""
    out = {}
    zero = {x: 0 for x in t.coordinates}
    for mu, nu in itertools.product(range(len(t.coordinates)), repeat=2):
        e = t.entries[mu][nu]
        for k, x in enumerate(t.coordinates):
            d = derive(e, x, "left").subs(zero)
            if d:
                out[(mu, nu, k)] = d
    return out


def at_origin(t: PoissonTable) -> PoissonTable:
    zero = {x: 0 for x in t.coordinates}
    return PoissonTable(t.coordinates, t.grading, [[x.subs(zero) for x in r] for r in t.entries])


def check_not_dual_mismatch(alg: SuperAlgebra, r: RMatrix):
    if len(r.grading) != alg.dim:
        raise AlgebraError("r and algebra dimensions differ")
