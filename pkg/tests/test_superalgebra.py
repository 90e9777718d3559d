import json

import pytest
from hypothesis import given, settings, strategies as st

from superbialg import AlgebraError, SuperAlgebra, algebra, algebra_names, parse
from superbialg.superalgebra import bracket_elements

CATALOG = [n for n in algebra_names() if "alpha" not in n]


@pytest.mark.parametrize("name", CATALOG)
def test_catalog_algebra_is_valid(name):
    assert algebra(name).validate() == []


def test_generic_odd_family_valid_for_any_parameters():
    assert algebra("(A_{1,1}+2A)_{alpha,beta,gamma}").validate() == []


def _mutants():
    E, O = 0, 1
    # antisymmetry broken by hand
    bad_anti = SuperAlgebra("anti", (E, O), {(1, 0, 1): 1, (1, 1, 0): 1})
    # [X_1, X_2] = X_1 with X_2 odd violates the grading
    bad_grade = SuperAlgebra.from_brackets("grade", (E, O), [(1, 2, 1, 1)])
    # even three dimensional bracket that fails Jacobi
    bad_jacobi = SuperAlgebra.from_brackets("jac", (E, E, E), [(1, 2, 2, 1), (1, 3, 3, 1), (2, 3, 1, 1)])
    # C^1_{1/2} with [X_1, X_3] = X_3; Jacobi needs the weight 1/2
    c = algebra("C^1_{1/2}")
    f = dict(c.f)
    f[(2, 0, 2)], f[(2, 2, 0)] = parse("1"), parse("-1")
    bad_scaled = SuperAlgebra("C^1_{1/2} scaled", c.grading, f)
    # odd structure constant
    bad_coeff = SuperAlgebra.from_brackets("odd coefficient", (E, O), [(1, 2, 2, parse("zeta"))])
    # (A_{1,1}+2A)^1 with X_1 acting on X_2; [X_2, [X_2, X_2]] no longer vanishes
    d = algebra("(A_{1,1}+2A)^1")
    bad_flip = SuperAlgebra.from_brackets("(A_{1,1}+2A)^1 deformed", d.grading,
                                          [(i, j, k, c) for i, j, k, c in d.brackets()] + [(1, 2, 2, 1)])
    # [psi, psi] = psi is odd-valued
    bad_square = SuperAlgebra.from_brackets("square", (E, O), [(2, 2, 2, 1)])
    return [bad_anti, bad_grade, bad_jacobi, bad_scaled, bad_coeff, bad_flip, bad_square]


@pytest.mark.parametrize("mutant", _mutants(), ids=lambda a: a.name)
def test_mutant_algebra_fails(mutant):
    assert mutant.validate()


def test_json_round_trip():
    a = algebra("C^5_p")
    b = SuperAlgebra.from_dict(json.loads(a.to_json()))
    assert b.f == a.f and b.grading == a.grading


def test_from_dict_rejects_bad_index():
    with pytest.raises(AlgebraError):
        SuperAlgebra.from_dict({"grading": ["even"], "brackets": [{"i": 1, "j": 2, "k": 1, "coeff": "1"}]})


def test_unknown_algebra():
    with pytest.raises(AlgebraError):
        algebra("Z_9")


def test_adjoint_matches_structure_constants():
    a = algebra("C^5_p")
    for i in range(3):
        m, ad = a.adjoint(i), a.ad_action(i)
        for k in range(3):
            for j in range(3):
                assert ad[k][j] == a.c(k, i, j)
                assert m.entries[j][k] == -a.c(k, i, j)


def test_supertranspose_entries():
    a = algebra("C^4")
    m = a.adjoint(1)
    t = m.supertranspose()
    g = a.grading
    for r in range(3):
        for c in range(3):
            s = -1 if g[r] * g[c] else 1
            assert t.entries[r][c] == s * m.entries[c][r]
    assert t.supertranspose().entries == m.entries


coeffs = st.integers(-2, 2)


@settings(max_examples=40, deadline=None)
@given(coeffs, coeffs, coeffs, coeffs, coeffs, coeffs)
def test_bracket_is_super_antisymmetric_on_elements(a1, a2, a3, b1, b2, b3):
    alg = algebra("C^4")
    u = {0: parse(str(a1)), 1: parse(str(a2)) * parse("zeta"), 2: parse(str(a3)) * parse("eta")}
    v = {0: parse(str(b1)), 1: parse(str(b2)), 2: parse(str(b3))}
    # u is even (odd directions carry odd coefficients); v has mixed parts, test its even part only
    v_even = {0: v[0]}
    left = bracket_elements(alg, u, v_even)
    right = bracket_elements(alg, v_even, u)
    keys = set(left) | set(right)
    assert all(not ((left.get(k) or parse("0")) + (right.get(k) or parse("0"))) for k in keys)
