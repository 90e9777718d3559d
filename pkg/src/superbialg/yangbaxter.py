"""Coboundary r-matrices, the graded Schouten bracket and classification."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import sympy as sp

from . import tensors as T
from .bialgebra import SuperBialgebra
from .conventions import current
from .linsolve import solve, in_span
from .superalgebra import SuperAlgebra, SuperMatrix, sgn, AlgebraError
from .symkernel import Scalar, SymbolicError, lookup


class NotASolution(ValueError):
    pass


@dataclass
class RMatrix:
    coeffs: dict          # {(i, j): Scalar}, 0-based
    grading: tuple
    side: str = "primal"

    def __post_init__(self):
        self.coeffs = T.clean(self.coeffs)
        for (i, j), v in self.coeffs.items():
            if v.parity not in (None, (self.grading[i] + self.grading[j]) % 2):
                raise AlgebraError(f"coefficient r^{i + 1}{j + 1} = {v} has the wrong parity")

    @classmethod
    def parse(cls, text: str, grading, side="primal") -> "RMatrix":
        return cls(T.parse_tensor(text, grading), tuple(grading), side)

    @property
    def dim(self):
        return len(self.grading)

    def subs(self, mapping) -> "RMatrix":
        return RMatrix({k: v.subs(mapping) for k, v in self.coeffs.items()}, self.grading, self.side)

    def matrix(self):
        n = self.dim
        return [[self.coeffs.get((i, j)) or Scalar() for j in range(n)] for i in range(n)]

    def symmetric_part(self) -> dict:
        return T.symmetric_part(self.coeffs, self.grading)

    def is_skew(self) -> bool:
        return not self.symmetric_part()

    def __eq__(self, other):
        return isinstance(other, RMatrix) and T.equal(self.coeffs, other.coeffs)

    def __str__(self):
        return T.format_tensor(self.coeffs)

    def to_list(self):
        return [{"i": i + 1, "j": j + 1, "coeff": str(v)} for (i, j), v in sorted(self.coeffs.items())]


def _oriented(b: SuperBialgebra, side: str) -> SuperBialgebra:
    if side not in ("primal", "dual"):
        raise ValueError("side must be primal or dual")
    return b if side == "primal" else b.swapped()


# the adjoint-matrix form of the coboundary condition ------------------------------

def coboundary_operator(alg: SuperAlgebra, r: dict) -> list:
    """Y_i = X_i^st r + (-1)^l r X_i for each i, as {(j, k): Scalar}."""
    conv = current()
    g, n = alg.grading, alg.dim
    out = []
    for i in range(n):
        X = alg.adjoint(i)
        Xst = X.supertranspose(conv)
        acc: dict = {}
        for j in range(n):
            for k in range(n):
                v = Scalar()
                for l in range(n):
                    a = Xst[j, l]
                    if a and (l, k) in r:
                        v = v + a * r[(l, k)]
                    b = X[l, k]
                    if b and (j, l) in r:
                        v = v + r[(j, l)] * b * conv.sign("row_sign", l=g[l])
                if v:
                    acc[(j, k)] = v
        out.append(acc)
    return out


def coboundary_target(b: SuperBialgebra) -> list:
    """Y~_i with entries -f~^{jk}_i."""
    n = b.dim
    return [T.clean({(j, k): -b.dual.c(i, j, k) for j in range(n) for k in range(n)}) for i in range(n)]


def coboundary_residual(b: SuperBialgebra, r, side="primal") -> list:
    b = _oriented(b, side)
    coeffs = r.coeffs if isinstance(r, RMatrix) else r
    lhs = coboundary_operator(b.primal, coeffs)
    rhs = coboundary_target(b)
    return [T.add(x, y, -1) for x, y in zip(lhs, rhs)]


def is_solution(b, r, side="primal") -> bool:
    return all(not x for x in coboundary_residual(b, r, side))


@dataclass
class SolutionSet:
    grading: tuple
    side: str
    particular: dict = field(default_factory=dict)   # even c-number tensor
    even_basis: list = field(default_factory=list)   # c-number tensors with c-number multipliers
    odd_basis: list = field(default_factory=list)    # c-number tensors with a-number multipliers
    constraints: list = field(default_factory=list)  # pivots assumed nonzero
    conditions: list = field(default_factory=list)   # must vanish for a solution to exist
    bind: dict = field(default_factory=dict)

    @property
    def empty(self) -> bool:
        return bool(self.conditions)

    def contains(self, r) -> bool:
        if self.empty:
            return False
        coeffs = r.coeffs if isinstance(r, RMatrix) else r
        comps: dict = {}
        for key, v in coeffs.items():
            for (mono, ek), c in v.terms.items():
                if ek != 0:
                    return False
                comps.setdefault(mono, {})[key] = c
        keys = list(itertools.product(range(len(self.grading)), repeat=2))
        ok = True
        base = comps.get((), {})
        diff = {k: base.get(k, 0) - (self.particular[k].to_sympy() if k in self.particular else 0) for k in keys}
        ok &= in_span(diff, [_sym(v, keys) for v in self.even_basis])
        for mono, vec in comps.items():
            if not mono:
                continue
            basis = self.odd_basis if len(mono) % 2 else self.even_basis
            ok &= in_span({k: vec.get(k, 0) for k in keys}, [_sym(v, keys) for v in basis])
        return bool(ok)

    def general(self, even_names=None, odd_names=None) -> RMatrix:
        """Particular solution plus free multiples of the homogeneous basis."""
        even_names = even_names or [f"t{n + 1}" for n in range(len(self.even_basis))]
        odd_names = odd_names or [f"theta{n + 1}" for n in range(len(self.odd_basis))]
        for nm in odd_names:
            from .symkernel import declare
            declare(nm, 1, "parameter")
        out = dict(self.particular)
        for nm, v in zip(even_names, self.even_basis):
            out = T.add(out, T.scale(Scalar.symbol(nm), v))
        for nm, v in zip(odd_names, self.odd_basis):
            out = T.add(out, T.scale(Scalar.symbol(nm), v))
        return RMatrix(out, self.grading, self.side)

    def to_dict(self) -> dict:
        return {
            "side": self.side,
            "coboundary": not self.empty,
            "bind": {k: str(v) for k, v in sorted(self.bind.items())},
            "particular": T.format_tensor(self.particular),
            "even_homogeneous": [T.format_tensor(v) for v in self.even_basis],
            "odd_homogeneous": [T.format_tensor(v) for v in self.odd_basis],
            "nonzero": sorted(str(c) for c in self.constraints),
            "requires_zero": sorted(str(c) for c in self.conditions),
        }


def _sym(t: dict, keys) -> dict:
    return {k: (t[k].to_sympy() if k in t else sp.Integer(0)) for k in keys}


def solve_coboundary(b: SuperBialgebra, side: str = "primal", bind: dict | None = None,
                     skew: bool = False) -> SolutionSet:
    """General solution of the coboundary equation; odd unknowns solve the homogeneous part."""
    bind = {k: Scalar.coerce(v) for k, v in (bind or {}).items()}
    bb = _oriented(b.subs(bind) if bind else b, side)
    alg, g, n = bb.primal, bb.grading, bb.dim
    keys = list(itertools.product(range(n), repeat=2))
    unit = {k: {k: Scalar.one()} for k in keys}
    ops = {k: coboundary_operator(alg, unit[k]) for k in keys}
    target = coboundary_target(bb)
    result = SolutionSet(g, side, bind=bind)
    for parity in (0, 1):
        unk = [k for k in keys if (g[k[0]] + g[k[1]]) % 2 == parity]
        rows, rhs = [], []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    if (g[i] + g[j] + g[k]) % 2 != parity:
                        continue
                    row = {}
                    for u in unk:
                        c = ops[u][i].get((j, k))
                        if c:
                            row[u] = c.to_sympy()
                    t = target[i].get((j, k))
                    rows.append(row)
                    rhs.append(t.to_sympy() if (t and parity == 0) else sp.Integer(0))
        if skew:
            for (j, k) in unk:
                if (j, k) <= (k, j):
                    s = sgn(g[j] * g[k])
                    row = {(j, k): sp.Integer(1)}
                    row[(k, j)] = row.get((k, j), 0) + s
                    rows.append(row)
                    rhs.append(sp.Integer(0))
        sol = solve(rows, rhs, unk)
        result.constraints.extend(sol.pivots)
        conv = lambda d: T.clean({k: Scalar.from_sympy(v) for k, v in d.items()})
        if parity == 0:
            result.conditions.extend(sol.inconsistent)
            result.particular = conv(sol.particular)
            result.even_basis = [conv(v) for v in sol.basis]
        else:
            result.odd_basis = [conv(v) for v in sol.basis]
    result.constraints = _dedupe(result.constraints)
    return result


def _dedupe(exprs):
    out = []
    for e in exprs:
        f = sp.factor(e)
        for part in sp.Mul.make_args(f):
            if part.is_Number:
                continue
            base = part.base if part.is_Pow else part
            if not any(sp.cancel(base - o) == 0 or sp.cancel(base + o) == 0 for o in out):
                out.append(base)
    return out


def skew_reduce(b: SuperBialgebra, side: str = "primal", bind=None) -> SolutionSet:
    """Restriction of the solution set to graded skew-symmetric r."""
    return solve_coboundary(b, side, bind, skew=True)


# cocommutator induced by r via the tensor action ---------------------------------

def cocommutator_from_r(alg: SuperAlgebra, r) -> list:
    """delta_r(X_i) = (ad_{X_i} (x) 1 + 1 (x) ad_{X_i}) r as {(j, k): coeff}."""
    conv = current()
    coeffs = r.coeffs if isinstance(r, RMatrix) else r
    g, n = alg.grading, alg.dim
    out = []
    for i in range(n):
        acc: dict = {}
        for (a, bidx), c in coeffs.items():
            pc = (g[a] + g[bidx]) % 2
            for l in range(n):
                f1 = alg.c(l, i, a)
                if f1:
                    s = conv.sign("action_left", i=g[i], c=pc, j=g[l], k=g[bidx])
                    acc[(l, bidx)] = acc.get((l, bidx), Scalar()) + c * f1 * s
                f2 = alg.c(l, i, bidx)
                if f2:
                    s = conv.sign("action_right", i=g[i], c=pc, j=g[a], k=g[l])
                    acc[(a, l)] = acc.get((a, l), Scalar()) + c * f2 * s
        out.append(T.clean(acc))
    return out


def cocommutator_tensor(b: SuperBialgebra, side="primal") -> list:
    bb = _oriented(b, side)
    conv = current()
    g, n = bb.grading, bb.dim
    return [T.clean({(j, k): bb.dual.c(i, j, k) * conv.sign("cocommutator", j=g[j], k=g[k])
                     for j in range(n) for k in range(n)}) for i in range(n)]


# Schouten bracket -----------------------------------------------------------------

def schouten(r, alg: SuperAlgebra) -> dict:
    """[[r, r]] = [r12, r13] + [r12, r23] + [r13, r23] as a 3-tensor."""
    conv = current()
    coeffs = r.coeffs if isinstance(r, RMatrix) else r
    g, n = alg.grading, alg.dim
    out: dict = {}

    def put(key, v):
        out[key] = out.get(key, Scalar()) + v

    items = list(coeffs.items())
    for (i, j), a in items:
        for (k, l), b in items:
            ab = a * b
            if not ab:
                continue
            par = dict(i=g[i], j=g[j], k=g[k], l=g[l])
            for m in range(n):
                c = alg.c(m, i, k)
                if c:
                    put((m, j, l), ab * c * conv.sign("schouten_12_13", **par))
                c = alg.c(m, j, k)
                if c:
                    put((i, m, l), ab * c * conv.sign("schouten_12_23", **par))
                c = alg.c(m, j, l)
                if c:
                    put((i, k, m), ab * c * conv.sign("schouten_13_23", **par))
    return T.clean(out)


def tensor3_action(alg: SuperAlgebra, i: int, t: dict) -> dict:
    g, n = alg.grading, alg.dim
    out: dict = {}
    for (a, b, c), v in t.items():
        s0 = sgn(g[i] * v.grade())
        for l in range(n):
            x = alg.c(l, i, a)
            if x:
                out[(l, b, c)] = out.get((l, b, c), Scalar()) + v * x * s0
            x = alg.c(l, i, b)
            if x:
                out[(a, l, c)] = out.get((a, l, c), Scalar()) + v * x * s0 * sgn(g[i] * g[a])
            x = alg.c(l, i, c)
            if x:
                out[(a, b, l)] = out.get((a, b, l), Scalar()) + v * x * s0 * sgn(g[i] * (g[a] + g[b]))
    return T.clean(out)


# classification -----------------------------------------------------------------------

@dataclass
class ClassificationResult:
    kind: str
    r: RMatrix
    schouten: dict
    symmetric_part: dict
    notes: list = field(default_factory=list)

    def to_dict(self, grading=None):
        d = {"kind": self.kind, "r": str(self.r), "symmetric_part": T.format_tensor(self.symmetric_part),
             "notes": list(self.notes)}
        try:
            d["schouten"] = [{"coeff": str(c), "wedge": [i + 1 for i in idx]}
                             for c, idx in T.wedge_form(self.schouten, self.r.grading)]
        except ValueError:
            d["schouten"] = T.format_tensor(self.schouten)
        return d


def _body(t: dict) -> dict:
    """Drop every Grassmann-odd-parameter component."""
    return T.clean({k: Scalar({key: c for key, c in v.terms.items() if not key[0]}) for k, v in t.items()})


def _body_det(sym: dict, g) -> Scalar:
    from .symkernel import _det
    n = len(g)
    m = [[Scalar({k: c for k, c in (sym.get((i, j)) or Scalar()).terms.items() if not k[0]})
          for j in range(n)] for i in range(n)]
    return _det(m)


def classify(b: SuperBialgebra, r: RMatrix, side: str = "primal") -> ClassificationResult:
    bb = _oriented(b, side)
    if not is_solution(b, r, side):
        raise NotASolution("r does not solve the coboundary equation")
    alg, g = bb.primal, bb.grading
    S = schouten(r, alg)
    sym = r.symmetric_part()
    notes = []
    invariant_sym = all(not x for x in coboundary_operator(alg, sym))
    if not sym and not S:
        kind = "triangular"
    elif invariant_sym and not S:
        kind = "quasi-triangular"
        notes.append("symmetric part is invariant and [[r,r]] = 0")
    elif all(not tensor3_action(alg, i, _body(S)) for i in range(alg.dim)):
        kind = "quasi-triangular"
        notes.append("[[r,r]] is ad-invariant")
        if _body(S) != S:
            notes.append("invariance tested on the c-number part of [[r,r]]")
    else:
        raise AlgebraError("[[r,r]] is not ad-invariant; the cocommutator of r fails co-Jacobi")
    if kind == "quasi-triangular" and sym:
        det = _body_det(sym, g)
        if det.is_zero():
            notes.append("symmetric part is degenerate")
        elif det.is_constant() and not det.free_symbols:
            kind = "factorizable"
        else:
            notes.append(f"factorizable iff {det} != 0")
    return ClassificationResult(kind, r, S, sym, notes)


def _zero_free(sol: SolutionSet) -> RMatrix:
    return RMatrix(dict(sol.particular), sol.grading, sol.side)


def classify_side(b: SuperBialgebra, side: str = "primal", bind=None) -> ClassificationResult | None:
    """Type of one side of a bialgebra; None when that side is not coboundary.

    A triangular witness is looked for among graded skew-symmetric solutions
    with the free parameters switched off; failing that, the general solution
    is classified by the definitions.
    """
    bind = {k: Scalar.coerce(v) for k, v in (bind or {}).items()}
    bb = b.subs(bind) if bind else b
    full = solve_coboundary(bb, side)
    if full.empty:
        return None
    alg = _oriented(bb, side).primal
    skew = solve_coboundary(bb, side, skew=True)
    if not skew.empty:
        witness = _zero_free(skew)
        if not schouten(witness, alg):
            res = classify(bb, witness, side)
            res.notes.append("skew witness with free parameters set to zero")
            return res
    res = classify(bb, full.general(), side)
    res.notes.extend(f"{c} != 0" for c in full.constraints)
    return res


def bi_r_matrix_check(b: SuperBialgebra, bind=None) -> dict:
    primal = solve_coboundary(b, "primal", bind)
    dual = solve_coboundary(b, "dual", bind)
    return {"primal": primal, "dual": dual, "is_bi_r": not primal.empty and not dual.empty}


def isomorphism_residual(alpha: SuperMatrix, r: RMatrix, r2: RMatrix, target: SuperAlgebra) -> list:
    """Failure of (alpha (x) alpha) r - r' to be invariant in the target algebra."""
    if not alpha.is_homogeneous(0):
        raise AlgebraError("alpha must be parity preserving")
    from .symkernel import inverse
    try:
        inverse(alpha.entries)
    except (SymbolicError, ZeroDivisionError) as e:
        raise AlgebraError(f"alpha is singular: {e}") from e
    g = r.grading
    # alpha(X_i) = sum_j (-1)^{|j|} alpha_i^j X'_j
    image: dict = {}
    for (i, j), c in r.coeffs.items():
        for a in range(len(g)):
            x = alpha[i, a]
            if not x:
                continue
            for bb in range(len(g)):
                y = alpha[j, bb]
                if not y:
                    continue
                # c X_i (x) X_j -> c (a-coeff) X'_a (x) (b-coeff) X'_b ; alpha entries are c-numbers
                v = c * x * y * sgn(g[a] + g[bb])
                image[(a, bb)] = image.get((a, bb), Scalar()) + v
    diff = T.add(T.clean(image), r2.coeffs, -1)
    return coboundary_operator(target, diff)
