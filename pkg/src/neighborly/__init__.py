"""Invariants of squarefree monomial ideals, with closed forms for NI(P_n^2)."""
from .graph import Graph, closed_neighborhood, graph_square, minimal_dominating_sets, path_graph
from .ideal import (
    SquarefreeIdeal,
    add,
    alexander_dual_ideal,
    colon_by_monomial,
    complementary_ideal,
    minimal_primes,
    neighborhood_ideal,
    ni_pn2,
    path_ideal,
)
from .resolution import BettiTable, betti_hochster, betti_koszul_oracle, pd_reg_depth
from .simplicial import SimplicialComplex, facet_complex, fh_vectors, stanley_reisner_complex

__version__ = "0.1.0"
