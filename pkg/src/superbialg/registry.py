"""Catalog of the two- and three-dimensional Lie superalgebras and super-bialgebras.

Anticommutators are entered literally, {X, X} = f X, in the basis where the
factor sqrt(-1) of the standard basis has been dropped.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .superalgebra import SuperAlgebra, AlgebraError

E, O = 0, 1

# name -> (grading, brackets (i, j, k, coeff), constraints, params)
_ALGEBRAS = {
    # type (1,1)
    "B": ((E, O), [(1, 2, 2, "1")], (), ()),
    "(A_{1,1}+A)": ((E, O), [(2, 2, 1, "1")], (), ()),
    "I_{(1,1)}": ((E, O), [], (), ()),
    # type (2,1)
    "(B+A_{1,1})": ((E, E, O), [(1, 3, 3, "1")], (), ()),
    "(2A_{1,1}+A)": ((E, E, O), [(3, 3, 1, "1")], (), ()),
    "C^1_0": ((E, E, O), [(1, 2, 2, "1")], (), ()),
    "C^1_p": ((E, E, O), [(1, 2, 2, "1"), (1, 3, 3, "p")], ("p != 0",), ("p",)),
    "C^1_{1/2}": ((E, E, O), [(1, 2, 2, "1"), (1, 3, 3, "1/2"), (3, 3, 2, "1")], (), ()),
    "I_{(2,1)}": ((E, E, O), [], (), ()),
    # type (1,2)
    # listed literally; the identification with B + A_{0,1} is not acted on
    "C^2_0": ((E, O, O), [(1, 2, 2, "1")], (), ()),
    "(A_{1,1}+2A)^0": ((E, O, O), [(2, 2, 1, "1")], (), ()),
    "C^2_p": ((E, O, O), [(1, 2, 2, "1"), (1, 3, 3, "p")], ("0 < |p| <= 1",), ("p",)),
    "C^2_1": ((E, O, O), [(1, 2, 2, "1"), (1, 3, 3, "1")], (), ()),
    "C^3": ((E, O, O), [(1, 3, 2, "1")], (), ()),
    "C^4": ((E, O, O), [(1, 2, 2, "1"), (1, 3, 2, "1"), (1, 3, 3, "1")], (), ()),
    "C^5_p": ((E, O, O), [(1, 2, 2, "p"), (1, 2, 3, "-1"), (1, 3, 2, "1"), (1, 3, 3, "p")],
              ("p >= 0",), ("p",)),
    "(A_{1,1}+2A)^1": ((E, O, O), [(2, 2, 1, "1"), (3, 3, 1, "1")], (), ()),
    "(A_{1,1}+2A)^2": ((E, O, O), [(2, 2, 1, "1"), (3, 3, 1, "-1")], (), ()),
    "I_{(1,2)}": ((E, O, O), [], (), ()),
    # duals
    "(A_{1,1}+A).i": ((E, O), [(2, 2, 1, "-1")], (), ()),
    "(B+A_{1,1}).i": ((E, E, O), [(2, 3, 3, "1")], (), ()),
    "(2A_{1,1}+A).i": ((E, E, O), [(3, 3, 1, "-1")], (), ()),
    "(2A_{1,1}+A).ii": ((E, E, O), [(3, 3, 2, "1")], (), ()),
    "C^1_{-p}.i": ((E, E, O), [(1, 2, 1, "1"), (2, 3, 3, "p")], (), ("p",)),
    "C^1_{0,k}": ((E, E, O), [(1, 2, 2, "k")], ("k != 0",), ("k",)),
    "C^1_p.i|_{p=-1/2}": ((E, E, O), [(1, 2, 1, "1"), (2, 3, 3, "1/2")], (), ()),
    "C^1_p.ii|_{p=-1/2}": ((E, E, O), [(1, 2, 1, "-1"), (2, 3, 3, "-1/2")], (), ()),
    "C^1_{1/2}.i": ((E, E, O), [(1, 2, 1, "1"), (2, 3, 3, "-1/2"), (3, 3, 1, "1")], (), ()),
    "C^1_{1/2}.ii": ((E, E, O), [(1, 2, 1, "-1"), (2, 3, 3, "1/2"), (3, 3, 1, "-1")], (), ()),
    "C^1_{1/2,k}": ((E, E, O), [(1, 2, 2, "k"), (1, 3, 3, "k/2"), (3, 3, 2, "k")],
                    ("k != 0",), ("k",)),
}


def odd_pair_family(sup: str | int | None, a: str, b: str, c: str) -> SuperAlgebra:
    """The (1,2) family {X2,X2}=a X1, {X2,X3}=b X1, {X3,X3}=c X1."""
    head = "(A_{1,1}+2A)" + (f"^{sup}" if sup is not None else "")
    name = f"{head}_{{{a},{b},{c}}}"
    params = []
    for v in (a, b, c):
        for s in ("alpha", "beta", "gamma", "k", "s"):
            if s == v and s not in params:
                params.append(s)
    return SuperAlgebra.from_brackets(
        name, (E, O, O), [(2, 2, 1, a), (2, 3, 1, b), (3, 3, 1, c)], params=tuple(params))


GENERIC_ODD_DUAL = "(A_{1,1}+2A)_{alpha,beta,gamma}"


def algebra_names() -> list:
    return list(_ALGEBRAS) + [GENERIC_ODD_DUAL]


def _parse_family(name: str):
    head = "(A_{1,1}+2A)"
    if not name.startswith(head) or "_{" not in name:
        return None
    rest = name[len(head):]
    sup = None
    if rest.startswith("^"):
        sup, rest = rest[1], rest[2:]
    if not (rest.startswith("_{") and rest.endswith("}")):
        return None
    parts = rest[2:-1].split(",")
    if len(parts) != 3:
        return None
    return odd_pair_family(sup, *[p.strip() for p in parts])


def algebra(name: str) -> SuperAlgebra:
    if name in _ALGEBRAS:
        grading, br, cons, params = _ALGEBRAS[name]
        return SuperAlgebra.from_brackets(name, grading, br, cons, params)
    fam = _parse_family(name)
    if fam is not None:
        return fam
    raise AlgebraError(f"unknown algebra {name!r}")


@dataclass(frozen=True)
class Pair:
    primal: str
    dual: str
    table: int
    bind: tuple = ()           # ((param, value-string), ...) fixed for this pair
    constraints: tuple = ()

    @property
    def name(self) -> str:
        return f"({self.primal},{self.dual})"

    @property
    def type(self):
        return algebra(self.primal).type

    def algebras(self):
        b = dict(self.bind)
        return algebra(self.primal).subs(b), algebra(self.dual).subs(b)


def _table2():
    t = 2
    out = [Pair("(2A_{1,1}+A)", "I_{(2,1)}", t)]
    for d in ("I_{(2,1)}", "(B+A_{1,1}).i", "(2A_{1,1}+A)", "(2A_{1,1}+A).i"):
        out.append(Pair("(B+A_{1,1})", d, t))
    for d in ("I_{(2,1)}", "(2A_{1,1}+A)", "(2A_{1,1}+A).i"):
        out.append(Pair("C^1_p", d, t, constraints=("p real",)))
    out.append(Pair("C^1_p", "(2A_{1,1}+A).ii", t, bind=(("p", "1/2"),)))
    out.append(Pair("C^1_p", "C^1_{-p}.i", t, constraints=("p real",)))
    out.append(Pair("C^1_0", "C^1_{0,k}", t, constraints=("k != 0",)))
    for d in ("I_{(2,1)}", "C^1_p.i|_{p=-1/2}", "C^1_p.ii|_{p=-1/2}", "C^1_{1/2}.i", "C^1_{1/2}.ii"):
        out.append(Pair("C^1_{1/2}", d, t))
    out.append(Pair("C^1_{1/2}", "C^1_{1/2,k}", t, constraints=("k != 0",)))
    return out


def _table3():
    return [Pair("(A_{1,1}+A)", "I_{(1,1)}", 3), Pair("B", "I_{(1,1)}", 3),
            Pair("B", "(A_{1,1}+A)", 3), Pair("B", "(A_{1,1}+A).i", 3)]


def _fam(n, a, b, c):
    return f"(A_{{1,1}}+2A)^{n}_{{{a},{b},{c}}}"


def _eps(template):
    """Expand a template containing 'e' and '-e' into epsilon = 1, -1."""
    out = []
    for e in ("1", "-1"):
        me = "-1" if e == "1" else "1"
        out.append(tuple(me if x == "-e" else e if x == "e" else x for x in template))
    return out


def _table4():
    t = 4
    out = []

    def add(g, entries, cons=()):
        for n, abc, extra in entries:
            rows = _eps(abc) if ("e" in abc or "-e" in abc) else [abc]
            for a, b, c in rows:
                out.append(Pair(g, _fam(n, a, b, c), t, constraints=tuple(cons) + tuple(extra)))

    out.append(Pair("C^2_1", "I_{(1,2)}", t))
    add("C^2_1", [(0, ("0", "0", "e"), ()), (1, ("e", "0", "e"), ()), (2, ("e", "0", "-e"), ())])
    cp = ("-1 <= p < 1",)
    out.append(Pair("C^2_p", "I_{(1,2)}", t, constraints=cp))
    add("C^2_p", [(0, ("e", "0", "0"), ()), (0, ("0", "0", "e"), ()), (0, ("e", "e", "e"), ()),
                  (1, ("e", "k", "e"), ("-1 < k < 1",)),
                  (2, ("0", "1", "0"), ()), (2, ("e", "1", "0"), ()), (2, ("0", "1", "e"), ()),
                  (2, ("e", "k", "-e"), ("k real",))], cp)
    out.append(Pair("C^3", "I_{(1,2)}", t))
    add("C^3", [(0, ("1", "0", "0"), ()), (0, ("0", "0", "1"), ()), (1, ("e", "0", "e"), ()),
                (2, ("0", "e", "0"), ()), (2, ("e", "0", "-e"), ())])
    out.append(Pair("C^4", "I_{(1,2)}", t))
    add("C^4", [(0, ("e", "0", "0"), ()), (0, ("0", "0", "e"), ()),
                (1, ("k", "0", "1"), ("k > 0",)), (1, ("s", "0", "-1"), ("s < 0",)),
                (2, ("0", "e", "0"), ()), (2, ("k", "0", "1"), ("k < 0",)), (2, ("s", "0", "-1"), ("s > 0",))])
    c5 = ("p >= 0",)
    out.append(Pair("C^5_p", "I_{(1,2)}", t, constraints=c5))
    add("C^5_p", [(0, ("0", "0", "e"), ()),
                  (1, ("k", "0", "1"), ("k > 0",)), (1, ("s", "0", "-1"), ("s < 0",)),
                  (2, ("k", "0", "1"), ("k < 0",)), (2, ("s", "0", "-1"), ("s > 0",))], c5)
    for n in (0, 1, 2):
        out.append(Pair(f"(A_{{1,1}}+2A)^{n}", "I_{(1,2)}", t))
    return out


def pairs() -> list:
    """All 74 catalogued super-bialgebras in catalog order."""
    return _table3() + _table2() + _table4()


def _norm(name: str) -> str:
    return name.replace(" ", "")


def find_pair(name: str) -> Pair:
    key = _norm(name)
    for p in pairs():
        if _norm(p.name) == key:
            return p
    # generic families and explicit pairs not in the catalog, e.g. "(C^2_p,(A_{1,1}+2A)_{alpha,beta,gamma})"
    if key.startswith("(") and key.endswith(")"):
        inner = key[1:-1]
        depth = 0
        for pos, ch in enumerate(inner):
            if ch in "({":
                depth += 1
            elif ch in ")}":
                depth -= 1
            elif ch == "," and depth == 0:
                g, d = inner[:pos], inner[pos + 1:]
                algebra(g)
                algebra(d)
                return Pair(g, d, 0)
    raise AlgebraError(f"unknown pair {name!r}")
