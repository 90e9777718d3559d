import pytest
from hypothesis import given, settings, strategies as st

from superbialg import (NotASolution, RMatrix, SuperBialgebra, algebra, classify, classify_side,
                        cocommutator_from_r, find_pair, parse, schouten, skew_reduce, solve_coboundary)
from superbialg import tensors as T
from superbialg.yangbaxter import bi_r_matrix_check, cocommutator_tensor


def bialg(name, **bind):
    b = SuperBialgebra.from_pair(find_pair(name))
    return b.subs({k: parse(str(v)) for k, v in bind.items()}) if bind else b


def test_b_pair_primal_r():
    b = bialg("(B,(A_{1,1}+A))")
    sol = solve_coboundary(b)
    assert sol.contains(RMatrix.parse("-1/4:2^2", b.grading))
    assert not sol.contains(RMatrix.parse("1/4:2^2", b.grading))
    assert classify_side(b).kind == "triangular"


def test_b_pair_dual_schouten():
    b = bialg("(B,(A_{1,1}+A))")
    r = RMatrix.parse("1/2:2^2", b.grading)
    assert solve_coboundary(b, "dual").contains(r)
    assert T.equal(schouten(r, b.dual), T.parse_tensor("-1/2:1^2^2", b.grading))
    assert classify(b, r, "dual").kind == "quasi-triangular"


def test_c1p_pair_needs_generic_p():
    b = bialg("(C^1_p,(2A_{1,1}+A))")
    sol = solve_coboundary(b)
    assert sol.contains(RMatrix.parse("-1/(4*p):3^3", b.grading))
    assert {str(c) for c in sol.constraints} == {"p", "p - 1"}
    assert solve_coboundary(b, "dual").empty
    assert not bi_r_matrix_check(b)["is_bi_r"]


def test_abelian_dual_gives_r_zero_family():
    b = bialg("((2A_{1,1}+A),I_{(2,1)})")
    sol = solve_coboundary(b)
    assert not sol.particular
    assert sol.contains(RMatrix({}, b.grading))


def test_skew_reduce_gives_skew_solutions():
    b = bialg("((B+A_{1,1}),(2A_{1,1}+A))")
    sol = skew_reduce(b, "dual")
    assert sol.general().is_skew()


def test_classify_rejects_non_solution():
    b = bialg("(B,(A_{1,1}+A))")
    with pytest.raises(NotASolution):
        classify(b, RMatrix.parse("1:2^2", b.grading))


def test_cocommutator_round_trip():
    b = bialg("((B+A_{1,1}),(B+A_{1,1}).i)")
    r = solve_coboundary(b).general()
    got = cocommutator_from_r(b.primal, r)
    assert all(T.equal(x, y) for x, y in zip(got, cocommutator_tensor(b)))


ALGS = ["C^1_{1/2}", "C^4", "C^5_p", "(B+A_{1,1})", "(A_{1,1}+2A)^1", "C^3"]


@st.composite
def skew_r(draw):
    name = draw(st.sampled_from(ALGS))
    alg = algebra(name)
    if alg.params:
        alg = alg.subs({p: parse("2") for p in alg.params})
    g, n = alg.grading, alg.dim
    t = {}
    for i in range(n):
        for j in range(i, n):
            if g[i] != g[j]:
                continue
            w = T.wedge2(g, i, j)
            if w:
                t = T.add(t, T.scale(parse(str(draw(st.integers(-3, 3)))), w))
    return alg, RMatrix(t, g)


@settings(max_examples=40, deadline=None)
@given(skew_r())
def test_schouten_of_skew_r_is_graded_antisymmetric(case):
    alg, r = case
    assert T.totally_antisymmetric(schouten(r, alg), alg.grading)


@settings(max_examples=30, deadline=None)
@given(skew_r())
def test_schouten_is_quadratic(case):
    alg, r = case
    r2 = RMatrix(T.scale(parse("2"), r.coeffs), r.grading)
    assert T.equal(schouten(r2, alg), T.scale(parse("4"), schouten(r, alg)))


@settings(max_examples=30, deadline=None)
@given(skew_r())
def test_coboundary_is_a_cocycle(case):
    alg, r = case
    delta = cocommutator_from_r(alg, r)
    assert SuperBialgebra(alg, alg).cocycle_check(delta) == []
