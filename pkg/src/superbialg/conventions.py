"""Sign conventions, stored as GF(2) polynomials in index parities.

A sign rule is a list of monomials; each monomial is a list of variable names
and the empty monomial is the constant 1.  The sign is (-1)**(sum of monomials).
The defaults can be overridden for experiments by pointing the environment
variable SUPERBIALG_CONVENTIONS at a JSON file with any subset of the keys.
"""
from __future__ import annotations

import hashlib
import json
import os
from functools import lru_cache

DEFAULTS = {
    # (M^st)_{ab} = (-1)^{E(a, b)} M_{ba}
    "supertranspose": [["a", "b"]],
    # second term of the adjoint-matrix coboundary equation carries (-1)^{E(l)}
    "row_sign": [["l"]],
    # delta(X_i) = (-1)^{E(j, k)} f~^{jk}_i X_j (x) X_k
    "cocommutator": [["j", "k"]],
    # graded Schouten bracket pieces, coefficient r^{ij} r^{kl}
    "schouten_12_13": [["i", "k"], ["i", "l"], ["j", "l"]],
    "schouten_12_23": [["i", "k"], ["i", "l"], ["j", "k"], ["j", "l"]],
    "schouten_13_23": [["i", "k"], ["i", "l"], ["j", "k"], ["j", "l"], ["j", "k"]],
    # tensor action (ad (x) 1 + 1 (x) ad) on c X_j (x) X_k; c = coefficient parity,
    # k = parity of the second output leg
    "action_left": [["i", "c"], ["c"], ["c", "k"]],
    "action_right": [["i", "c"], ["i", "j"], ["c", "k"]],
    # extra (-1)^{|j|} on column j of the dual right-derivative invariant fields
    "dual_right_field_column": [["j"]],
    # dual Sklyanin bracket prefactor (-1)^{|i|}
    "dual_bracket_prefactor": [["i"]],
    # sign for an odd r coefficient c in the Sklyanin contraction; none is needed
    # (graded antisymmetry fails with [["c", "i"]] or [["c", "j"]])
    "odd_coefficient": [],
}


class Conventions:
    def __init__(self, rules: dict):
        self.rules = rules

    def sign(self, key: str, **parities) -> int:
        e = 0
        for mono in self.rules[key]:
            t = 1
            for v in mono:
                t *= parities[v] % 2
            e += t
        return -1 if e % 2 else 1

    def st_sign(self, a: int, b: int) -> int:
        return self.sign("supertranspose", a=a, b=b)

    def digest(self) -> str:
        blob = json.dumps(self.rules, sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()[:16]


@lru_cache(maxsize=None)
def _load(path: str | None) -> Conventions:
    rules = {k: [list(m) for m in v] for k, v in DEFAULTS.items()}
    if path:
        with open(path) as fh:
            override = json.load(fh)
        unknown = set(override) - set(DEFAULTS)
        if unknown:
            raise ValueError(f"unknown convention keys: {sorted(unknown)}")
        rules.update(override)
    return Conventions(rules)


def current() -> Conventions:
    return _load(os.environ.get("SUPERBIALG_CONVENTIONS") or None)
