"""Exact supercommutative scalars.

A Scalar is a finite sum of terms ``coef * exp(key) * theta_1 ... theta_k`` where
the theta are odd symbols kept in a fixed global order, ``key`` is linear in the
even coordinates and ``coef`` is a cancelled sympy rational function in the
parameters (polynomial in the coordinates).  Trigonometric and hyperbolic
functions are stored as complex exponentials, so identities such as
``cos(x)**2 + sin(x)**2 == 1`` hold structurally.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import sympy as sp


class SymbolicError(ValueError):
    pass


class UnsupportedDivision(SymbolicError):
    pass


class ParseError(SymbolicError):
    pass


@dataclass(frozen=True)
class Symbol:
    name: str
    parity: int
    kind: str = "parameter"  # or "coordinate"
    index: int = 0

    @property
    def sort_key(self):
        return (0 if self.kind == "coordinate" else 1, self.index, self.name)

    @property
    def sym(self) -> sp.Symbol:
        return sp.Symbol(self.name, real=True)


_REGISTRY: dict[str, Symbol] = {}


def declare(name: str, parity: int = 0, kind: str = "parameter") -> Symbol:
    old = _REGISTRY.get(name)
    if old is not None:
        if (old.parity, old.kind) != (parity, kind):
            raise SymbolicError(f"symbol {name!r} already declared as {old}")
        return old
    s = Symbol(name, parity, kind, len(_REGISTRY))
    _REGISTRY[name] = s
    return s


def lookup(name: str) -> Symbol:
    """Return the declared symbol, defaulting to an even parameter."""
    s = _REGISTRY.get(name)
    if s is None:
        s = declare(name, 0, "parameter")
    return s


for _n in ("x", "y", "x~", "y~"):
    declare(_n, 0, "coordinate")
for _n in ("psi", "chi", "psi~", "chi~"):
    declare(_n, 1, "coordinate")
for _n in ("zeta", "eta"):
    declare(_n, 1, "parameter")


def _coordinate_syms() -> set:
    return {s.sym for s in _REGISTRY.values() if s.kind == "coordinate" and s.parity == 0}


def _canon_key(expo) -> tuple[sp.Expr, sp.Expr]:
    """Split an exponent into (canonical linear key in coordinates, constant part)."""
    expo = sp.expand(sp.sympify(expo))
    coords = sorted(expo.free_symbols & _coordinate_syms(), key=lambda s: s.name)
    if not coords:
        return sp.Integer(0), expo
    poly = sp.Poly(expo, *coords)
    if poly.total_degree() > 1:
        raise SymbolicError(f"exponent not linear in coordinates: {expo}")
    key = sp.Integer(0)
    for c in coords:
        key += sp.cancel(poly.coeff_monomial(c)) * c
    const = poly.coeff_monomial(1)
    return key, const


def _exp_form(expr) -> dict:
    """Canonicalise a commuting sympy expression into {key: coef}."""
    expr = sp.sympify(expr)
    trig = (sp.sin, sp.cos, sp.sinh, sp.cosh, sp.tan, sp.tanh)
    if expr.has(*trig):
        expr = expr.replace(lambda f: isinstance(f, trig), lambda f: f.rewrite(sp.exp))
    coords = _coordinate_syms()
    try:
        return _collect_exp(_expand(expr), coords)
    except UnsupportedDivision:
        pass
    # exponentials in a denominator: move them up and retry
    num, den = sp.fraction(sp.together(expr))
    keep = sp.Integer(1)
    for f in sp.Mul.make_args(den):
        if isinstance(f, sp.exp):
            num *= sp.exp(-f.args[0])
        elif f.is_Pow and (f.base is sp.E or isinstance(f.base, sp.exp)):
            num *= f ** -1
        else:
            keep *= f
    return _collect_exp(_expand(num / keep), coords)


def _expand(expr):
    return sp.expand(expr, power_exp=True, power_base=False, log=False, multinomial=True)


def _collect_exp(expr, coords) -> dict:
    out: dict = {}
    for term in sp.Add.make_args(expr):
        coef = sp.Integer(1)
        expo = sp.Integer(0)
        for f in sp.Mul.make_args(term):
            if isinstance(f, sp.exp):
                expo += f.args[0]
            elif f.is_Pow and f.base is sp.E:
                expo += f.exp
            elif f.is_Pow and isinstance(f.base, sp.exp) and f.exp.is_Integer:
                expo += f.base.args[0] * f.exp
            else:
                if f.is_Pow and f.exp.is_negative and (f.base.free_symbols & coords):
                    raise UnsupportedDivision(f"division by {f.base}")
                if f.has(sp.exp) and (f.free_symbols & coords):
                    raise UnsupportedDivision(f"unsupported factor {f}")
                coef *= f
        key, const = _canon_key(expo)
        if const != 0:
            coef *= sp.exp(const)
        out[key] = out.get(key, 0) + coef
    res = {}
    for k, c in out.items():
        c = sp.cancel(c)
        if c != 0:
            _check_denominator(c, coords)
            res[k] = c
    return res


def _check_denominator(c, coords):
    _, den = sp.fraction(c)
    if den.free_symbols & coords:
        raise UnsupportedDivision(f"division by {den}")


def _sort_sign(mono: Iterable[Symbol]):
    """Sort odd symbols into canonical order; return (sign, tuple) or (0, None)."""
    items = list(mono)
    if len(set(items)) != len(items):
        return 0, None
    sign = 1
    # insertion sort counting transpositions
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1].sort_key > items[j].sort_key:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(items)


class Scalar:
    """Element of the supercommutative coefficient ring."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None, _clean: bool = False):
        if _clean:
            self.terms = terms
            return
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if not isinstance(c, sp.Number):
                    c = sp.cancel(c)
                if c != 0:
                    self.terms[k] = c

    # constructors -----------------------------------------------------
    @classmethod
    def const(cls, value) -> "Scalar":
        if isinstance(value, Fraction):
            value = sp.Rational(value.numerator, value.denominator)
        return cls.from_sympy(sp.sympify(value))

    @classmethod
    def from_sympy(cls, expr) -> "Scalar":
        expr = sp.sympify(expr)
        for s in expr.free_symbols:
            if lookup(s.name).parity:
                raise SymbolicError(f"odd symbol {s.name} inside commuting expression")
        return cls({((), k): c for k, c in _exp_form(expr).items()})

    @classmethod
    def symbol(cls, name: str) -> "Scalar":
        s = lookup(name)
        if s.parity:
            return cls({((s,), sp.Integer(0)): sp.Integer(1)})
        return cls({((), sp.Integer(0)): s.sym})

    @classmethod
    def zero(cls) -> "Scalar":
        return cls()

    @classmethod
    def one(cls) -> "Scalar":
        return cls.const(1)

    # basic predicates --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    @property
    def parity(self):
        """0 or 1 for homogeneous scalars, None for zero; raises if mixed."""
        ps = {len(m) % 2 for (m, _) in self.terms}
        if not ps:
            return None
        if len(ps) > 1:
            raise SymbolicError(f"inhomogeneous scalar {self}")
        return ps.pop()

    def grade(self) -> int:
        p = self.parity
        return 0 if p is None else p

    def is_commuting(self) -> bool:
        return all(not m for (m, _) in self.terms)

    def is_constant(self) -> bool:
        """Free of coordinates and odd symbols."""
        if not self.is_commuting():
            return False
        coords = _coordinate_syms()
        return all(k == 0 and not (c.free_symbols & coords) for (_, k), c in self.terms.items())

    @property
    def free_symbols(self) -> set[str]:
        out = set()
        for (m, k), c in self.terms.items():
            out.update(s.name for s in m)
            out.update(s.name for s in (c.free_symbols | k.free_symbols))
        return out

    # arithmetic -----------------------------------------------------------
    @staticmethod
    def coerce(other) -> "Scalar":
        if isinstance(other, Scalar):
            return other
        if isinstance(other, str):
            return parse(other)
        return Scalar.const(other)

    def __add__(self, other):
        other = Scalar.coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return Scalar(t)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({k: -c for k, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 1:
                return self
            if other == -1:
                return -self
        other = Scalar.coerce(other)
        if not self.terms or not other.terms:
            return Scalar()
        t: dict = {}
        for (m1, k1), c1 in self.terms.items():
            for (m2, k2), c2 in other.terms.items():
                if m1 and m2:
                    sign, m = _sort_sign(m1 + m2)
                    if not sign:
                        continue
                else:
                    sign, m = 1, m1 or m2
                if k1 == 0 or k2 == 0:
                    key, const = k1 + k2, 0
                else:
                    key, const = _canon_key(k1 + k2)
                c = sign * c1 * c2
                if const != 0:
                    c *= sp.exp(const)
                t[(m, key)] = t.get((m, key), 0) + c
        return Scalar(t)

    def __rmul__(self, other):
        return Scalar.coerce(other) * self

    def inverse(self) -> "Scalar":
        """Inverse of an even scalar whose odd-free part is a single exponential term."""
        body = Scalar({k: c for k, c in self.terms.items() if not k[0]})
        nil = self - body
        if len(body.terms) != 1:
            raise UnsupportedDivision(f"cannot invert {self}")
        (m, key), c = next(iter(body.terms.items()))
        num, den = sp.fraction(c)
        if num.free_symbols & _coordinate_syms():
            raise UnsupportedDivision(f"cannot invert {self}")
        binv = Scalar({((), -key): 1 / c})
        if nil.is_zero():
            return binv
        if nil.parity not in (0, None):
            raise UnsupportedDivision(f"cannot invert odd scalar {self}")
        # (b + n)^-1 = b^-1 sum (-n b^-1)^k ; n nilpotent
        q = -(nil * binv)
        acc, powk = Scalar.one(), Scalar.one()
        while True:
            powk = powk * q
            if powk.is_zero():
                break
            acc = acc + powk
        return binv * acc

    def __truediv__(self, other):
        other = Scalar.coerce(other)
        if not other.is_constant():
            raise UnsupportedDivision(f"division by {other}")
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            raise SymbolicError("only integer powers are supported")
        if n < 0:
            return Scalar.one() / (self ** (-n))
        acc = Scalar.one()
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        try:
            other = Scalar.coerce(other)
        except (SymbolicError, TypeError, sp.SympifyError):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash(tuple(sorted((str(k), str(c)) for k, c in self.terms.items())))

    # substitutions -------------------------------------------------------
    def subs(self, mapping: dict) -> "Scalar":
        """Substitute symbols (by name) with Scalars or numbers."""
        mapping = {(k.name if isinstance(k, Symbol) else str(k)): Scalar.coerce(v)
                   for k, v in mapping.items()}
        even = {}
        for name, v in mapping.items():
            if not lookup(name).parity:
                if not v.is_commuting():
                    raise SymbolicError(f"cannot put non-commuting value for {name}")
                even[lookup(name).sym] = v.to_sympy()
        out = Scalar()
        for (m, key), c in self.terms.items():
            if even:
                base = Scalar.from_sympy(sp.sympify(c).subs(even)) * Scalar.from_sympy(sp.exp(sp.sympify(key).subs(even)))
            else:
                base = Scalar({((), key): c})
            acc = base
            for s in m:
                acc = acc * (mapping[s.name] if s.name in mapping else Scalar({((s,), sp.Integer(0)): 1}))
            out = out + acc
        return out

    def map_coefficients(self, fn) -> "Scalar":
        return Scalar({k: fn(c) for k, c in self.terms.items()})

    def odd_part(self, mono: tuple) -> "Scalar":
        return Scalar({k: c for k, c in self.terms.items() if k[0] == mono})

    # conversion -------------------------------------------------------------
    def to_sympy(self) -> sp.Expr:
        if not self.is_commuting():
            raise SymbolicError("scalar has odd part")
        return _real_form({k: c for (_, k), c in self.terms.items()})

    def __str__(self):
        return to_string(self)

    def __repr__(self):
        return f"Scalar({to_string(self)!r})"


def _real_form(d: dict) -> sp.Expr:
    total = sp.Integer(0)
    for key, coef in d.items():
        a, b = sp.re(key), sp.im(key)
        cr, ci = sp.re(coef), sp.im(coef)
        total += sp.exp(a) * (cr * sp.cos(b) - ci * sp.sin(b))
    return sp.factor_terms(sp.expand(total)) if total.has(sp.I) else total


def to_string(s: Scalar) -> str:
    if s.is_zero():
        return "0"
    groups: dict = {}
    for (m, key), c in s.terms.items():
        groups.setdefault(m, {})[key] = c
    parts = []
    for m in sorted(groups, key=lambda m: (len(m), [x.sort_key for x in m])):
        e = _real_form(groups[m])
        if e == 0:
            continue
        if not m:
            parts.append(sp.sstr(e))
            continue
        mono = "*".join(x.name for x in m)
        if e == 1:
            parts.append(mono)
        elif e == -1:
            parts.append("-" + mono)
        elif e.is_Add:
            parts.append(f"({sp.sstr(e)})*{mono}")
        else:
            parts.append(f"{sp.sstr(e)}*{mono}")
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


# parsing ---------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:\.\d+)?)|([A-Za-z_][A-Za-z0-9_~]*)|(\*\*|[-+*/^()]))")
_FUNCS = {"exp": sp.exp, "cos": sp.cos, "sin": sp.sin, "cosh": sp.cosh, "sinh": sp.sinh}


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at {pos} in {text!r}")
        pos = m.end()
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", num))
        elif name is not None:
            toks.append(("name", name))
        else:
            toks.append(("op", "^" if op == "**" else op))
    return toks


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, val=None):
        t = self.peek()
        if t[0] is None or (val is not None and t[1] != val):
            raise ParseError(f"expected {val or 'token'} in {self.text!r}")
        self.i += 1
        return t

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            r = self.term()
            v = v + r if op == "+" else v - r
        return v

    def term(self):
        v = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            op = self.take()[1]
            r = self.unary()
            v = v * r if op == "*" else v / r
        return v

    def unary(self):
        t = self.peek()
        if t == ("op", "-"):
            self.take()
            return -self.unary()
        if t == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            e = self.unary()
            if not e.is_constant() or not e.to_sympy().is_Integer:
                raise ParseError("exponent must be an integer constant")
            return base ** int(e.to_sympy())
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return Scalar.const(sp.Rational(val))
        if kind == "name":
            if val in _FUNCS and self.peek() == ("op", "("):
                self.take("(")
                arg = self.expr()
                self.take(")")
                if not arg.is_commuting():
                    raise ParseError(f"odd argument to {val}")
                return Scalar.from_sympy(_FUNCS[val](arg.to_sympy()))
            return Scalar.symbol(val)
        if val == "(":
            v = self.expr()
            self.take(")")
            return v
        raise ParseError(f"unexpected {val!r} in {self.text!r}")


def parse(text: str) -> Scalar:
    p = _Parser(str(text))
    if not p.toks:
        raise ParseError("empty expression")
    v = p.expr()
    if p.i != len(p.toks):
        raise ParseError(f"trailing input in {text!r}")
    return v


S = parse


# calculus ----------------------------------------------------------------------

def derive(s: Scalar, coord: str, side: str = "left") -> Scalar:
    """Derivative with respect to a coordinate; odd ones act from the given side."""
    c = lookup(coord)
    if c.kind != "coordinate":
        raise SymbolicError(f"{coord} is not a coordinate")
    out: dict = {}
    if not c.parity:
        u = c.sym
        for (m, key), coef in s.terms.items():
            d = sp.diff(coef, u) + coef * sp.diff(key, u)
            out[(m, key)] = out.get((m, key), 0) + d
        return Scalar(out)
    for (m, key), coef in s.terms.items():
        if c not in m:
            continue
        pos = m.index(c)
        sign = (-1) ** pos if side == "left" else (-1) ** (len(m) - 1 - pos)
        nm = m[:pos] + m[pos + 1:]
        out[(nm, key)] = out.get((nm, key), 0) + sign * coef
    return Scalar(out)


# matrices ------------------------------------------------------------------------

Matrix = list  # list of rows of Scalars


def mat(rows) -> Matrix:
    return [[Scalar.coerce(x) for x in r] for r in rows]


def identity(n: int) -> Matrix:
    return [[Scalar.one() if i == j else Scalar() for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = Scalar()
            for l in range(k):
                if a[i][l] and b[l][j]:
                    acc = acc + a[i][l] * b[l][j]
            row.append(acc)
        out.append(row)
    return out


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(c, a: Matrix) -> Matrix:
    c = Scalar.coerce(c)
    return [[c * x for x in r] for r in a]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x.is_zero() for r in a for x in r)


def _det(b: Matrix) -> Scalar:
    n = len(b)
    if n == 0:
        return Scalar.one()
    if n == 1:
        return b[0][0]
    acc = Scalar()
    for j in range(n):
        if b[0][j].is_zero():
            continue
        minor = [r[:j] + r[j + 1:] for r in b[1:]]
        term = b[0][j] * _det(minor)
        acc = acc + term if j % 2 == 0 else acc - term
    return acc


def inverse(m: Matrix) -> Matrix:
    """Inverse of a square matrix of even scalars with unit body determinant."""
    n = len(m)
    body = [[Scalar({k: c for k, c in x.terms.items() if not k[0]}) for x in r] for r in m]
    nil = [[x - y for x, y in zip(rm, rb)] for rm, rb in zip(m, body)]
    dinv = _det(body).inverse()
    adj = [[Scalar() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(body) if k != i]
            c = _det(minor)
            adj[j][i] = c if (i + j) % 2 == 0 else -c
    binv = matscale(dinv, adj)
    q = matscale(-1, matmul(binv, nil))
    acc, powk = identity(n), identity(n)
    while True:
        powk = matmul(powk, q)
        if is_zero_matrix(powk):
            break
        acc = matadd(acc, powk)
    return matmul(acc, binv)


def matrix_exponential(m, u: str) -> Matrix:
    """exp(u*M) for a constant square matrix M and an even coordinate u."""
    M = sp.Matrix([[Scalar.coerce(x).to_sympy() for x in r] for r in m])
    usym = lookup(u).sym
    if M.free_symbols & _coordinate_syms():
        raise SymbolicError("matrix must not depend on coordinates")
    n = M.shape[0]
    if M.is_zero_matrix:
        return identity(n)
    N = M
    nilpotent = False
    for _ in range(n):
        N = N * M if N is not M else M * M
        if N.applyfunc(sp.simplify).is_zero_matrix:
            nilpotent = True
            break
    if nilpotent:
        E = sp.eye(n)
        P = sp.eye(n)
        for k in range(1, n + 1):
            P = P * M * usym / k
            E = E + P
        res = E
    else:
        P, J = M.jordan_form()
        EJ = sp.zeros(n)
        i = 0
        while i < n:
            lam = J[i, i]
            j = i
            while j + 1 < n and J[j, j + 1] == 1:
                j += 1
            size = j - i + 1
            for a in range(size):
                for b in range(a, size):
                    EJ[i + a, i + b] = sp.exp(lam * usym) * usym ** (b - a) / sp.factorial(b - a)
            i = j + 1
        res = P * EJ * P.inv()
    return [[Scalar.from_sympy(res[i, j]) for j in range(n)] for i in range(n)]
