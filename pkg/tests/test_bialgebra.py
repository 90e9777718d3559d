import pytest
from hypothesis import given, settings, strategies as st

from superbialg import SuperBialgebra, algebra, find_pair, pairs
from superbialg.registry import algebra_names

PAIRS = pairs()


def test_catalog_has_74_pairs():
    assert len(PAIRS) == 74
    assert len({p.name for p in PAIRS}) == 74


@pytest.mark.parametrize("pair", PAIRS, ids=lambda p: p.name)
def test_catalog_pair_is_a_super_bialgebra(pair):
    rep = SuperBialgebra.from_pair(pair).verify()
    assert rep == {"primal": [], "dual": [], "mixed_jacobi": [], "cocycle": []}


@pytest.mark.parametrize("pair", PAIRS[::7], ids=lambda p: p.name)
def test_double_pairing_is_invariant(pair):
    assert SuperBialgebra.from_pair(pair).pairing_invariance_check() == []


def test_double_of_b_pair():
    b = SuperBialgebra.from_pair(find_pair("(B,(A_{1,1}+A))"))
    d = b.double()
    assert d.dim == 4 and d.grading == (0, 1, 0, 1)
    assert d.validate() == []


def test_incompatible_pair_fails_mixed_jacobi():
    b = SuperBialgebra(algebra("B"), algebra("B"))
    assert b.mixed_jacobi_check()
    assert b.double().validate()


def test_cocommutator_cocycle_detects_corruption():
    b = SuperBialgebra.from_pair(find_pair("(C^1_p,C^1_{-p}.i)"))
    delta = b.cocommutator()
    assert b.cocycle_check(delta) == []
    delta[2] = {k: v * 2 for k, v in delta[2].items()}
    assert b.cocycle_check(delta)


same_type = {}
for n in algebra_names():
    if "alpha" not in n:
        same_type.setdefault(algebra(n).grading, []).append(n)


@st.composite
def random_pairs(draw):
    grading = draw(st.sampled_from(sorted(same_type)))
    names = same_type[grading]
    return draw(st.sampled_from(names)), draw(st.sampled_from(names))


@settings(max_examples=40, deadline=None)
@given(random_pairs())
def test_double_jacobi_iff_mixed_jacobi(names):
    a, b = (algebra(n) for n in names)
    if a.params or b.params:
        a, b = a.subs({p: 2 for p in a.params}), b.subs({p: 3 for p in b.params})
    bi = SuperBialgebra(a, b)
    assert (not bi.mixed_jacobi_check()) == (not bi.double().validate())
