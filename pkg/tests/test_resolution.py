import random

import pytest
from hypothesis import given, settings, strategies as st

from neighborly.errors import CapExceeded
from neighborly.ideal import (
    SquarefreeIdeal,
    alexander_dual_ideal,
    colon_by_monomial,
    minimal_primes,
    ni_pn2,
    path_ideal,
)
from neighborly.formulas import pdpath_formula, pdreg_formula
from neighborly.resolution import (
    BettiTable,
    betti_hochster,
    betti_koszul_oracle,
    bight_vs_pd,
    has_linear_resolution,
    is_cohen_macaulay,
    is_sequentially_cm,
    lcm_lattice,
    pd_reg_depth,
    random_squarefree_ideal,
)


def I(n, *gens):
    return SquarefreeIdeal(n, tuple(frozenset(g) for g in gens))


C4 = I(4, {1, 2}, {2, 3}, {3, 4}, {1, 4})


def test_betti_ni_p6():
    b = betti_hochster(ni_pn2(6))
    assert b.sorted_entries() == [(0, 0, 1), (1, 3, 2), (2, 6, 1)]
    assert (b.pd, b.reg) == (2, 4)


def test_betti_ni_p5():
    b = betti_hochster(ni_pn2(5))
    assert b.sorted_entries() == [(0, 0, 1), (1, 3, 2), (2, 5, 1)]
    assert (b.pd, b.reg) == (2, 3)


def test_betti_principal():
    b = betti_hochster(ni_pn2(3))
    assert b.sorted_entries() == [(0, 0, 1), (1, 3, 1)]
    assert (b.pd, b.reg) == (1, 2)


def test_betti_c4_edge_ideal():
    b = betti_hochster(C4)
    assert b.sorted_entries() == [(0, 0, 1), (1, 2, 4), (2, 3, 4), (3, 4, 1)]


def test_multigraded_supports_lie_in_lcm_lattice():
    i = ni_pn2(9)
    lattice = {m for m in lcm_lattice(i)}
    for (_, sigma) in betti_hochster(i).multigraded:
        mask = sum(1 << v for v in sigma)
        assert mask in lattice


def test_invariants_ni_p7():
    inv = pd_reg_depth(betti_hochster(ni_pn2(7)), ni_pn2(7))
    assert inv == (3, 4, 4, 5)


def test_invariants_ni_p12():
    b = betti_hochster(ni_pn2(12))
    assert (b.pd, b.reg) == (4, 8)


@pytest.mark.parametrize("n", range(3, 15))
def test_pd_reg_engine_matches_formula(n):
    b = betti_hochster(ni_pn2(n))
    assert (b.pd, b.reg) == pdreg_formula(n)


@pytest.mark.parametrize("n", range(3, 11))
def test_hochster_matches_oracle_on_ni(n):
    i = ni_pn2(n)
    assert betti_hochster(i).multigraded == betti_koszul_oracle(i).multigraded


@pytest.mark.parametrize("n", [7, 8, 9])
def test_inner_colon_base_has_reg_two(n):
    colon = colon_by_monomial(path_ideal(n, 5, (2, n - 1)), {1, 2, 3})
    b = betti_hochster(colon)
    # S/(x4x5x6) is a hypersurface of degree 3
    assert (b.pd, b.reg) == (1, 2)


@pytest.mark.parametrize("n, t", [(3, 2), (5, 2), (7, 3), (9, 5), (11, 5), (10, 4), (13, 5)])
def test_path_ideal_formula_against_engine(n, t):
    b = betti_hochster(path_ideal(n, t))
    assert (b.pd, b.reg) == pdpath_formula(n, t)


def test_random_ideals_hochster_vs_oracle():
    rng = random.Random(20240611)
    for _ in range(200):
        ideal = random_squarefree_ideal(rng, rng.randint(1, 8))
        if ideal.unit or ideal.is_zero:
            continue
        assert betti_hochster(ideal).multigraded == betti_koszul_oracle(ideal).multigraded, str(ideal)


def test_random_ideals_prime_field_mode():
    rng = random.Random(7)
    for _ in range(40):
        ideal = random_squarefree_ideal(rng, rng.randint(1, 7))
        for p in (2, 3):
            assert betti_hochster(ideal, p).multigraded == betti_koszul_oracle(ideal, p).multigraded


def test_characteristic_two_changes_betti_numbers():
    # SR ideal of the six-vertex RP^2: torsion in H_1 shows up only over F_2
    rp2 = [{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
           {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}]
    from neighborly.simplicial import SimplicialComplex, stanley_reisner_ideal

    i = stanley_reisner_ideal(SimplicialComplex(6, tuple(frozenset(f) for f in rp2)))
    b0, b2 = betti_hochster(i, 0), betti_hochster(i, 2)
    assert b0.entries != b2.entries
    assert b2.multigraded == betti_koszul_oracle(i, 2).multigraded


def test_betti_rejects_degenerate_ideals():
    with pytest.raises(ValueError):
        betti_hochster(SquarefreeIdeal.zero(3))
    with pytest.raises(ValueError):
        betti_hochster(SquarefreeIdeal.unit_ideal(3))
    with pytest.raises(CapExceeded):
        betti_hochster(ni_pn2(20), max_ambient=16)
    with pytest.raises(CapExceeded):
        lcm_lattice(ni_pn2(16), cap=8)


def test_betti_table_json_roundtrip():
    b = betti_hochster(ni_pn2(8))
    doc = b.to_json(multigraded=True)
    assert BettiTable.from_json(doc, 8) == b
    assert b.dumps() == BettiTable.from_json(doc, 8).dumps()
    assert "0:" in b.render()


def test_cohen_macaulay_small():
    assert is_cohen_macaulay(ni_pn2(6))
    assert is_cohen_macaulay(ni_pn2(3))
    assert not is_cohen_macaulay(ni_pn2(4))
    assert not is_cohen_macaulay(ni_pn2(7))
    assert not is_cohen_macaulay(C4)


@pytest.mark.parametrize("n", range(3, 15))
def test_cm_only_for_three_and_six_in_range(n):
    assert is_cohen_macaulay(ni_pn2(n)) is (n in (3, 6))


def test_linear_resolution():
    # complement of C4 is chordal, complement of two disjoint edges is C4
    assert has_linear_resolution(C4)
    assert not has_linear_resolution(I(4, {1, 2}, {3, 4}))
    assert has_linear_resolution(I(3, {1, 2}, {2, 3}))
    assert has_linear_resolution(I(4, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}))
    assert not has_linear_resolution(I(3, {1}, {2, 3}))


def test_sequentially_cm_examples():
    # C4 edge ideal: dual (x1x3, x2x4) has no linear resolution, and the
    # SR complex (two disjoint edges) is pure and disconnected, hence not CM
    assert alexander_dual_ideal(C4) == I(4, {1, 3}, {2, 4})
    assert is_sequentially_cm(C4) is False
    assert is_sequentially_cm(I(3, {1, 2}, {2, 3})) is True
    assert is_sequentially_cm(ni_pn2(6)) is True
    assert is_sequentially_cm(ni_pn2(11)) is None


@pytest.mark.parametrize("n", range(6, 11))
def test_ni_is_sequentially_cm(n):
    assert is_sequentially_cm(ni_pn2(n)) is True


def test_bight_versus_pd():
    two_edges = I(4, {1, 2}, {3, 4})
    r = bight_vs_pd(two_edges)
    assert (r.bight, r.pd, r.equal) == (2, 2, True)
    assert bight_vs_pd(ni_pn2(10)) == (4, 4, True)
    assert bight_vs_pd(ni_pn2(7)).bight == 3


@pytest.mark.parametrize("n", range(7, 15))
def test_bight_equals_pd_for_ni(n):
    assert bight_vs_pd(ni_pn2(n)).equal


def test_bight_and_pd_can_differ():
    # SR ideal of two disjoint edges {1,2}, {3,4}: depth 1, so pd 3, but both primes have height 2
    i = I(4, {1, 3}, {1, 4}, {2, 3}, {2, 4})
    assert bight_vs_pd(i) == (2, 3, False)


@st.composite
def ideals(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    gens = draw(st.lists(st.frozensets(st.integers(1, n), min_size=1), min_size=1, max_size=5))
    return SquarefreeIdeal(n, tuple(gens))


@settings(max_examples=80, deadline=None)
@given(ideals())
def test_hochster_equals_oracle(i):
    assert betti_hochster(i).multigraded == betti_koszul_oracle(i).multigraded


@settings(max_examples=80, deadline=None)
@given(ideals())
def test_betti_table_invariants(i):
    b = betti_hochster(i)
    # alternating sum of total Betti numbers vanishes for a proper ideal
    assert sum((-1) ** k * b.total(k) for k in range(b.pd + 1)) == 0
    assert b.total(1) == len(i.generators)
    assert b.get(0, 0) == 1
    # pd is bounded below by bight and above by the ambient size
    assert minimal_primes(i).bight <= b.pd <= i.ambient_n
    # Eagon-Reiner: S/I is CM iff the dual has a linear resolution
    assert is_cohen_macaulay(i) == has_linear_resolution(alexander_dual_ideal(i))


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_first_betti_numbers_are_generator_degrees(i):
    b = betti_hochster(i)
    census = {}
    for g in i.generators:
        census[len(g)] = census.get(len(g), 0) + 1
    assert {j: v for (k, j), v in b.entries.items() if k == 1} == census


def _antichains(n):
    """Every nonempty antichain of nonempty subsets of {1..n}."""
    subsets = [frozenset(v for v in range(1, n + 1) if m >> (v - 1) & 1) for m in range(1, 1 << n)]
    out = []

    def grow(start, chosen):
        if chosen:
            out.append(tuple(chosen))
        for k in range(start, len(subsets)):
            s = subsets[k]
            if all(not (s <= c or c <= s) for c in chosen):
                grow(k + 1, chosen + [s])

    grow(0, [])
    return out


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_eagon_reiner_exhaustive(n):
    for gens in _antichains(n):
        i = SquarefreeIdeal(n, gens)
        assert is_cohen_macaulay(i) == has_linear_resolution(alexander_dual_ideal(i)), str(i)


def test_eagon_reiner_sampled_up_to_eight():
    rng = random.Random(11)
    for _ in range(150):
        i = random_squarefree_ideal(rng, rng.randint(5, 8))
        assert is_cohen_macaulay(i) == has_linear_resolution(alexander_dual_ideal(i)), str(i)
