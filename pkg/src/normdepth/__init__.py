"""Normalized depth functions of squarefree powers of monomial ideals."""

from .betti import (
    BettiTable,
    GProfile,
    betti_hochster,
    betti_taylor,
    depth_of,
    g_profile,
    has_linear_resolution,
    linear_quotients_order,
    pd_of,
    predict_adjoin_variable,
    predict_product,
    verify_betti_splitting,
)
from .complexes import GF2, QQ, FieldSpec, SimplicialComplex, reduced_homology, stanley_reisner
from .errors import CapExceeded, NormDepthError
from .graphs import Graph, complement, edge_ideal, gamma_complex, matching_number
from .ideal import (
    MonomialIdeal,
    adjoin_variable,
    initial_degree,
    minimalize,
    monomial,
    monomial_grade,
    product_disjoint,
    squarefree_power,
)

__all__ = [name for name in dir() if not name.startswith("_")]
