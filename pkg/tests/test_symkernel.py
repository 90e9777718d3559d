import sympy as sp
import pytest
from hypothesis import given, settings, strategies as st

from superbialg.symkernel import (Scalar, SymbolicError, declare, derive, inverse, matmul,
                                  matrix_exponential, parse)

declare("theta1", 1)
declare("theta2", 1)

ODD = ["psi", "chi", "zeta", "theta1"]
EVEN = ["x", "y", "a", "b"]


def scalars():
    coef = st.integers(-3, 3).map(Scalar.const)
    even = st.sampled_from(EVEN).map(Scalar.symbol)
    odd = st.sampled_from(ODD).map(Scalar.symbol)
    atom = st.one_of(coef, even, odd, st.sampled_from(["exp(x)", "exp(-2*y)", "sin(x)"]).map(parse))
    return st.lists(st.lists(atom, min_size=1, max_size=3), min_size=1, max_size=3).map(
        lambda terms: sum((_prod(t) for t in terms), Scalar()))


def _prod(factors):
    out = Scalar.one()
    for f in factors:
        out = out * f
    return out


def test_odd_generators_square_to_zero():
    psi = Scalar.symbol("psi")
    assert not psi * psi
    assert psi.parity == 1


def test_odd_generators_anticommute():
    psi, chi = Scalar.symbol("psi"), Scalar.symbol("chi")
    assert psi * chi == -(chi * psi)


def test_trig_identity_canonicalizes():
    assert parse("sin(x)^2 + cos(x)^2") == Scalar.one()
    assert parse("sinh(x)") == parse("(exp(x) - exp(-x))/2")


def test_exp_rules():
    assert parse("exp(x)*exp(-x)") == Scalar.one()
    assert parse("exp(2*x)") == parse("exp(x)^2")


def test_parse_round_trip():
    for text in ("psi*chi - 1/2", "exp(-p*x)*psi", "-zeta*x^2 + c"):
        s = parse(text)
        assert parse(str(s)) == s


def test_bad_input_raises():
    with pytest.raises(SymbolicError):
        parse("1 +* 2")


def test_left_and_right_derivatives():
    psi, chi = Scalar.symbol("psi"), Scalar.symbol("chi")
    f = psi * chi
    assert derive(f, "psi", "left") == chi
    assert derive(f, "psi", "right") == -chi
    assert derive(parse("exp(2*x)"), "x") == parse("2*exp(2*x)")


def test_matrix_exponential_nilpotent_and_diagonal():
    e = matrix_exponential([[0, 1], [0, 0]], "x")
    assert e[0][1] == Scalar.symbol("x")
    d = matrix_exponential([[1, 0], [0, -1]], "x")
    assert d[0][0] == parse("exp(x)") and d[1][1] == parse("exp(-x)")


def test_inverse_of_supermatrix_with_odd_entries():
    m = [[Scalar.one(), Scalar.symbol("psi")], [Scalar.symbol("chi"), parse("exp(x)")]]
    prod = matmul(m, inverse(m))
    assert all(prod[i][j] == (1 if i == j else 0) for i in range(2) for j in range(2))


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a


def _part(a, parity):
    return Scalar({k: v for k, v in a.terms.items() if len(k[0]) % 2 == parity})


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_graded_commutativity(a, b):
    for pa in (0, 1):
        for pb in (0, 1):
            x, y = _part(a, pa), _part(b, pb)
            assert x * y == (-1 if pa and pb else 1) * (y * x)


@settings(max_examples=40, deadline=None)
@given(scalars(), scalars())
def test_commuting_products_agree_with_sympy(a, b):
    x = a.subs({n: 0 for n in ODD})
    y = b.subs({n: 0 for n in ODD})
    assert sp.simplify((x * y).to_sympy() - x.to_sympy() * y.to_sympy()) == 0
