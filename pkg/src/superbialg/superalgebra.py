"""Lie superalgebras given by structure constants."""
from __future__ import annotations

import json
from dataclasses import dataclass, field

from .symkernel import Scalar, parse, SymbolicError

EVEN, ODD = 0, 1


def sgn(e: int) -> int:
    return -1 if e % 2 else 1


class AlgebraError(ValueError):
    pass


@dataclass
class SuperMatrix:
    entries: list
    row_grading: tuple
    col_grading: tuple

    def __post_init__(self):
        self.entries = [[Scalar.coerce(x) for x in r] for r in self.entries]

    @property
    def shape(self):
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_homogeneous(self, parity: int = 0) -> bool:
        for a, r in enumerate(self.entries):
            for b, x in enumerate(r):
                if x and x.parity != (self.row_grading[a] + self.col_grading[b] + parity) % 2:
                    return False
        return True

    def supertranspose(self, convention=None) -> "SuperMatrix":
        """(M^st)_{ab} = sign(a, b) M_{ba}; sign fixed by the convention set."""
        from .conventions import current
        conv = convention or current()
        if not self.is_homogeneous(0) and not self.is_homogeneous(1):
            raise AlgebraError("supertranspose needs a graded-homogeneous matrix")
        n, m = self.shape
        out = [[Scalar() for _ in range(n)] for _ in range(m)]
        for a in range(m):
            for b in range(n):
                x = self.entries[b][a]
                if x:
                    out[a][b] = x * conv.st_sign(self.col_grading[a], self.row_grading[b])
        return SuperMatrix(out, self.col_grading, self.row_grading)

    def __matmul__(self, other: "SuperMatrix") -> "SuperMatrix":
        from .symkernel import matmul
        return SuperMatrix(matmul(self.entries, other.entries), self.row_grading, other.col_grading)

    def __eq__(self, other):
        return (isinstance(other, SuperMatrix) and self.shape == other.shape
                and all(x == y for r, s in zip(self.entries, other.entries) for x, y in zip(r, s)))

    def is_zero(self):
        return all(x.is_zero() for r in self.entries for x in r)


class SuperAlgebra:
    """Structure constants f[k, i, j] with [X_i, X_j] = f^k_ij X_k (0-based indices)."""

    def __init__(self, name: str, grading, f: dict | None = None, constraints=(), params=()):
        self.name = name
        self.grading = tuple(int(g) for g in grading)
        self.dim = len(self.grading)
        self.f = {}
        for key, v in (f or {}).items():
            v = Scalar.coerce(v)
            if v:
                self.f[tuple(key)] = v
        self.constraints = tuple(constraints)
        self.params = tuple(params)

    @classmethod
    def from_brackets(cls, name, grading, brackets, constraints=(), params=()):
        """brackets: iterable of (i, j, k, coeff) with 1-based indices; the partner
        [X_j, X_i] is filled in by super antisymmetry."""
        grading = tuple(grading)
        f: dict = {}
        for i, j, k, c in brackets:
            c = Scalar.coerce(c)
            i, j, k = i - 1, j - 1, k - 1
            f[(k, i, j)] = f.get((k, i, j), Scalar()) + c
            if i != j:
                f[(k, j, i)] = f.get((k, j, i), Scalar()) - c * sgn(grading[i] * grading[j])
        return cls(name, grading, f, constraints, params)

    def c(self, k, i, j) -> Scalar:
        return self.f.get((k, i, j)) or Scalar()

    @property
    def type(self):
        return (self.grading.count(0), self.grading.count(1))

    def brackets(self):
        """Independent brackets (i <= j), 1-based, as (i, j, k, coeff)."""
        out = []
        for (k, i, j), v in sorted(self.f.items(), key=lambda t: (t[0][1], t[0][2], t[0][0])):
            if i <= j:
                out.append((i + 1, j + 1, k + 1, v))
        return out

    def subs(self, mapping: dict, name: str | None = None) -> "SuperAlgebra":
        if not mapping:
            return self
        f = {k: v.subs(mapping) for k, v in self.f.items()}
        keep = tuple(p for p in self.params if p not in mapping)
        return SuperAlgebra(name or self.name, self.grading, f, self.constraints, keep)

    def is_abelian(self):
        return not self.f

    def validate(self) -> list:
        """Violations of super antisymmetry, grading and super Jacobi."""
        g, n = self.grading, self.dim
        report = []
        for (k, i, j), v in sorted(self.f.items()):
            if (g[i] + g[j] + g[k]) % 2:
                report.append({"check": "grading", "indices": [i + 1, j + 1, k + 1], "value": str(v)})
            if v.parity not in (None, 0):
                report.append({"check": "coefficient-parity", "indices": [i + 1, j + 1, k + 1], "value": str(v)})
        for k in range(n):
            for i in range(n):
                for j in range(n):
                    d = self.c(k, i, j) + self.c(k, j, i) * sgn(g[i] * g[j])
                    if d:
                        report.append({"check": "antisymmetry", "indices": [i + 1, j + 1, k + 1],
                                       "value": str(d)})
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for m in range(n):
                        acc = Scalar()
                        for l in range(n):
                            acc = acc + (self.c(m, j, l) * self.c(l, k, i) * sgn(g[i] * (g[j] + g[k]))
                                         + self.c(m, i, l) * self.c(l, j, k)
                                         + self.c(m, k, l) * self.c(l, i, j) * sgn(g[k] * (g[i] + g[j])))
                        if acc:
                            report.append({"check": "jacobi", "indices": [i + 1, j + 1, k + 1, m + 1],
                                           "value": str(acc)})
        return report

    def adjoint(self, i: int) -> SuperMatrix:
        """(X_i)_l^k = -f^k_il, i 0-based."""
        if not 0 <= i < self.dim:
            raise AlgebraError(f"index {i} out of range")
        n = self.dim
        ent = [[-self.c(k, i, l) for k in range(n)] for l in range(n)]
        return SuperMatrix(ent, self.grading, self.grading)

    def ad_action(self, i: int):
        """Matrix A with (A)_{kj} = f^k_ij: coefficient-vector form of ad_{X_i}."""
        n = self.dim
        return [[self.c(k, i, j) for j in range(n)] for k in range(n)]

    # serialization ------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "grading": ["odd" if x else "even" for x in self.grading],
            "brackets": [{"i": i, "j": j, "k": k, "coeff": str(c)} for i, j, k, c in self.brackets()],
            "constraints": list(self.constraints),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "SuperAlgebra":
        try:
            grading = [1 if g == "odd" else 0 for g in d["grading"]]
            if int(d.get("dim", len(grading))) != len(grading):
                raise AlgebraError("dim does not match grading")
            br = [(int(b["i"]), int(b["j"]), int(b["k"]), parse(str(b["coeff"]))) for b in d.get("brackets", [])]
        except (KeyError, TypeError, SymbolicError) as e:
            raise AlgebraError(f"bad algebra description: {e}") from e
        n = len(grading)
        for i, j, k, _ in br:
            if not (1 <= i <= n and 1 <= j <= n and 1 <= k <= n):
                raise AlgebraError(f"bracket index out of range: {(i, j, k)}")
        return cls.from_brackets(d.get("name", "anonymous"), grading, br, d.get("constraints", ()))

    def __repr__(self):
        return f"SuperAlgebra({self.name!r}, grading={self.grading})"


def bracket_elements(alg: SuperAlgebra, u: dict, v: dict) -> dict:
    """Bracket of two homogeneous elements given as {index: Scalar} (basis coefficients)."""
    out: dict = {}
    g = alg.grading
    for i, a in u.items():
        for j, b in v.items():
            # [a X_i, b X_j] = a (-1)^{|i||b|} b [X_i, X_j]
            coef = a * b * sgn(g[i] * b.grade())
            for k in range(alg.dim):
                c = alg.c(k, i, j)
                if c:
                    out[k] = out.get(k, Scalar()) + coef * c
    return {k: v for k, v in out.items() if v}
