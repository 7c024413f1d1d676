import pytest
from hypothesis import given, settings, strategies as st

from neighborly.formulas import (
    PROOF_INNER_COLON_BASE,
    PROOF_OUTER_COLON_BASE,
    PdReg,
    bight_formula,
    cm_characterization,
    fh_formula,
    fh_transform_check,
    height_formula,
    intermediate_recursion,
    invariant_bundle,
    lemma_reg1_formula,
    mapping_cone_recursion,
    pdpath_formula,
    pdreg_formula,
)
from neighborly.ideal import SquarefreeIdeal, add, colon_by_monomial, ni_pn2, path_ideal
from neighborly.resolution import betti_hochster


def test_height_formula():
    assert [height_formula(n) for n in (3, 5, 6, 10, 11, 20)] == [1, 1, 2, 2, 3, 4]
    with pytest.raises(ValueError):
        height_formula(2)


def test_pdreg_formula_examples():
    assert pdreg_formula(3) == (1, 2)
    assert pdreg_formula(6) == (2, 4)
    assert pdreg_formula(7) == (3, 4)
    assert pdreg_formula(12) == (4, 8)
    assert pdreg_formula(11) == (4, 7)


def test_pdpath_examples():
    assert pdpath_formula(3, 2) == (2, 1)
    assert pdpath_formula(13, 5) == (4, 8)
    with pytest.raises(ValueError):
        pdpath_formula(3, 4)


def test_lemma_reg1_examples():
    assert lemma_reg1_formula(7) == (2, 4)
    assert lemma_reg1_formula(10) == (3, 6)
    assert lemma_reg1_formula(12) == (3, 6)


@pytest.mark.parametrize("n", range(7, 15))
def test_lemma_reg1_against_engine(n):
    j = add(path_ideal(n, 5, (2, n - 1)), SquarefreeIdeal(n, (frozenset({1, 2, 3}),)))
    b = betti_hochster(j)
    assert (b.pd, b.reg) == lemma_reg1_formula(n)


@pytest.mark.parametrize("n", range(7, 15))
def test_intermediate_recursion_matches_lemma(n):
    assert intermediate_recursion(n) == lemma_reg1_formula(n)


@pytest.mark.parametrize("n", [7, 8, 9])
def test_outer_base_values_against_engine(n):
    base = add(path_ideal(n, 5, (2, n - 1)), SquarefreeIdeal(n, (frozenset({1, 2, 3}),)))
    colon = colon_by_monomial(base, {n - 2, n - 1, n})
    b = betti_hochster(colon)
    assert (b.pd, b.reg) == PROOF_OUTER_COLON_BASE[n]


@pytest.mark.parametrize("n", [7, 8, 9])
def test_inner_base_values_as_written_differ_from_engine(n):
    colon = colon_by_monomial(path_ideal(n, 5, (2, n - 1)), {1, 2, 3})
    b = betti_hochster(colon)
    assert PROOF_INNER_COLON_BASE[n] == (1, 1)
    assert (b.pd, b.reg) == (1, 2)


def _outer_by_composition(n):
    # unshared form: recompute the inner recursion at every outer step
    from neighborly.formulas import _cone

    m = n % 3 + 6 if n % 3 else 9
    value = _cone(PROOF_OUTER_COLON_BASE[m], intermediate_recursion(m))
    while m < n:
        m += 3
        value = _cone(value, intermediate_recursion(m))
    return value


@pytest.mark.parametrize("n", range(7, 80))
def test_shared_chain_matches_composition(n):
    assert mapping_cone_recursion(n) == _outer_by_composition(n)


def test_recursion_is_insensitive_to_the_inner_base():
    engine_base = {m: PdReg(1, 2) for m in (7, 8, 9)}
    for n in range(7, 501):
        assert mapping_cone_recursion(n) == mapping_cone_recursion(n, inner_base=engine_base) == pdreg_formula(n)


@settings(deadline=None)
@given(st.integers(7, 2000))
def test_recursion_equals_case_table(n):
    assert mapping_cone_recursion(n) == pdreg_formula(n)


@given(st.integers(7, 2000))
def test_pdreg_growth(n):
    # attaching three more vertices adds at most one to pd and at most two to reg
    a, b = pdreg_formula(n), pdreg_formula(n + 3)
    assert 0 <= b.pd - a.pd <= 1 and 0 <= b.reg - a.reg <= 2


@given(st.integers(7, 2000))
def test_depth_equals_reg(n):
    pd, reg = pdreg_formula(n)
    assert n - pd == reg


@given(st.integers(2, 60), st.data())
def test_pdpath_bounds(n, data):
    t = data.draw(st.integers(2, n))
    pd, reg = pdpath_formula(n, t)
    assert 1 <= pd <= n and 0 <= reg


def test_fh_formula_n10():
    fh = fh_formula(10)
    assert fh.f == (1, 10, 26, 30, 17, 4)
    assert fh.h == (1, 5, -4, 2, 0, 0)
    assert fh.top_faces == 4


@pytest.mark.parametrize("n", range(7, 200))
def test_fh_transform_consistent(n):
    assert fh_transform_check(n)
    assert sum(fh_formula(n).h) == fh_formula(n).f[-1] == n - 6


def test_cm_characterization_as_stated():
    assert [n for n in range(1, 20) if cm_characterization(n)] == [1, 6]


def test_bight_formula():
    assert bight_formula(7) == 3
    assert bight_formula(11) == 4
    assert bight_formula(12) == 4


def test_invariant_bundle():
    b = invariant_bundle(7)
    assert (b.height, b.bight, b.pd, b.reg, b.depth, b.dim) == (2, 3, 3, 4, 4, 5)
    assert not b.is_cm
    assert b.fvec == (1, 7, 14, 12, 5, 1)
    assert b.top_face_count == 1
    with pytest.raises(ValueError):
        invariant_bundle(6)
