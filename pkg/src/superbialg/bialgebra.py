"""Lie super-bialgebras: compatibility checks, cocommutator and the Drinfeld double."""
from __future__ import annotations

from .superalgebra import SuperAlgebra, AlgebraError, sgn
from .symkernel import Scalar


def tensor_act(alg: SuperAlgebra, i: int, t: dict) -> dict:
    """(ad_{X_i} (x) 1 + 1 (x) ad_{X_i}) on a 2-tensor {(j, k): coeff}."""
    g = alg.grading
    out: dict = {}
    for (j, k), c in t.items():
        pc = c.grade()
        for l in range(alg.dim):
            a = alg.c(l, i, j)
            if a:
                out[(l, k)] = out.get((l, k), Scalar()) + c * a * sgn(g[i] * pc)
            b = alg.c(l, i, k)
            if b:
                out[(j, l)] = out.get((j, l), Scalar()) + c * b * sgn(g[i] * (pc + g[j]))
    return {k: v for k, v in out.items() if v}


def tensor_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, Scalar()) - v
    return {k: v for k, v in out.items() if v}


class SuperBialgebra:
    def __init__(self, primal: SuperAlgebra, dual: SuperAlgebra, name: str | None = None):
        if primal.grading != dual.grading:
            raise AlgebraError("primal and dual gradings differ")
        self.primal = primal
        self.dual = dual
        self.name = name or f"({primal.name},{dual.name})"

    @classmethod
    def from_pair(cls, pair, bind: dict | None = None):
        g, d = pair.algebras()
        if bind:
            g, d = g.subs(bind), d.subs(bind)
        return cls(g, d, pair.name)

    @property
    def dim(self):
        return self.primal.dim

    @property
    def grading(self):
        return self.primal.grading

    def swapped(self) -> "SuperBialgebra":
        """The dual bialgebra (g~, g)."""
        return SuperBialgebra(self.dual, self.primal, f"({self.dual.name},{self.primal.name})")

    def subs(self, mapping: dict) -> "SuperBialgebra":
        return SuperBialgebra(self.primal.subs(mapping), self.dual.subs(mapping), self.name)

    def mixed_jacobi_check(self) -> list:
        f, ft, g, n = self.primal.c, self.dual.c, self.grading, self.dim
        report = []
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        acc = Scalar()
                        for m in range(n):
                            acc = acc + (f(m, j, k) * ft(m, i, l)
                                         - f(i, m, k) * ft(j, m, l)
                                         - f(l, j, m) * ft(k, i, m)
                                         - f(i, j, m) * ft(k, m, l) * sgn(g[j] * g[l])
                                         - f(l, m, k) * ft(j, i, m) * sgn(g[i] * g[k]))
                        if acc:
                            report.append({"check": "mixed-jacobi", "indices": [i + 1, j + 1, k + 1, l + 1],
                                           "value": str(acc)})
        return report

    def cocommutator(self) -> list:
        """delta(X_i) as {(j, k): coeff of X_j (x) X_k}, one dict per i."""
        g, n = self.grading, self.dim
        out = []
        for i in range(n):
            d = {}
            for j in range(n):
                for k in range(n):
                    c = self.dual.c(i, j, k)
                    if c:
                        d[(j, k)] = c * sgn(g[j] * g[k])
            out.append(d)
        return out

    def cocycle_check(self, delta: list | None = None) -> list:
        alg, g, n = self.primal, self.grading, self.dim
        delta = delta if delta is not None else self.cocommutator()
        report = []
        for a in range(n):
            for b in range(n):
                lhs: dict = {}
                for k in range(n):
                    c = alg.c(k, a, b)
                    if c:
                        for key, v in delta[k].items():
                            lhs[key] = lhs.get(key, Scalar()) + c * v
                rhs = tensor_act(alg, a, delta[b])
                other = tensor_act(alg, b, delta[a])
                s = sgn(g[a] * g[b])
                for key, v in other.items():
                    rhs[key] = rhs.get(key, Scalar()) - v * s
                diff = tensor_sub(lhs, rhs)
                if diff:
                    report.append({"check": "cocycle", "indices": [a + 1, b + 1],
                                   "value": {f"{j + 1},{k + 1}": str(v) for (j, k), v in sorted(diff.items())}})
        return report

    def double(self) -> SuperAlgebra:
        """Drinfeld double on X_1..X_n, X~^1..X~^n."""
        n, g = self.dim, self.grading
        br = []
        for (k, i, j), v in self.primal.f.items():
            if i <= j:
                br.append((i + 1, j + 1, k + 1, v))
        for (k, i, j), v in self.dual.f.items():
            if i <= j:
                br.append((n + i + 1, n + j + 1, n + k + 1, v))
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    a = self.dual.c(i, j, k) * sgn(g[j])
                    if a:
                        br.append((i + 1, n + j + 1, k + 1, a))
                    b = self.primal.c(j, k, i) * sgn(g[i])
                    if b:
                        br.append((i + 1, n + j + 1, n + k + 1, b))
        return SuperAlgebra.from_brackets(f"D{self.name}", g + g, br)

    def double_bracket(self, a: int, c: int) -> dict:
        """[e_a, e_c] in the double, 0-based over X then X~; returns {index: coeff}."""
        d = self.double()
        return {k: d.c(k, a, c) for k in range(d.dim) if d.c(k, a, c)}

    def pairing(self, a: int, b: int) -> int:
        """Canonical form on the double; <X_i, X~^i> carries the grading sign so
        that the form is invariant under the double bracket."""
        n, g = self.dim, self.grading
        if a < n <= b and b - n == a:
            return sgn(g[a])
        if b < n <= a and a - n == b:
            return 1
        return 0

    def pairing_invariance_check(self) -> list:
        d = self.double()
        N, G = d.dim, d.grading
        report = []
        for z in range(N):
            for a in range(N):
                for b in range(N):
                    acc = Scalar()
                    for k in range(N):
                        acc = acc + d.c(k, z, a) * self.pairing(k, b) \
                            + d.c(k, z, b) * self.pairing(a, k) * sgn(G[z] * G[a])
                    if acc:
                        report.append({"check": "pairing-invariance", "indices": [z + 1, a + 1, b + 1],
                                       "value": str(acc)})
        return report

    def verify(self) -> dict:
        return {
            "primal": self.primal.validate(),
            "dual": self.dual.validate(),
            "mixed_jacobi": self.mixed_jacobi_check(),
            "cocycle": self.cocycle_check(),
        }
