"""
CANREL Linear Symplectic Category
Exact rational symplectic spaces, lagrangian canonical relations,
reduction, cotangent lifts and correspondence chains.
"""

from canrel.symplin.chains import CorrChain, ww_compose, ww_two_term
from canrel.symplin.cotangent import (
    LinComonoid,
    LinHopf,
    LinMonoid,
    check_lin_comonoid,
    check_lin_comonoid_morphism,
    check_lin_hopf,
    check_lin_monoid,
    cotangent_comonoid,
    cotangent_lift,
    cotangent_split,
    schwartz,
    vector_hopf,
)
from canrel.symplin.randomness import darboux_basis, random_lagrangian, random_lin_rel, random_matrix
from canrel.symplin.reduction import Factorization, InducedIso, ReductionData, factor, induced_iso, reduce
from canrel.symplin.relations import (
    LinCanRel,
    chain_lin,
    compose_lin,
    cross_lin,
    dom_im,
    lin_assoc,
    lin_equal,
    lin_graph,
    lin_identity,
    lin_middle_swap,
    lin_rel,
    lin_swap,
    lin_transpose,
)
from canrel.symplin.spaces import (
    Subspace,
    SympSpace,
    classify_subspace,
    contains,
    cotangent_space,
    direct_sum,
    dual,
    intersection,
    is_subset,
    orth,
    point_space,
    span,
    standard_space,
    subspace_sum,
    whole,
    zero,
)

__all__ = [
    "SympSpace",
    "Subspace",
    "LinCanRel",
    "ReductionData",
    "InducedIso",
    "Factorization",
    "CorrChain",
    "LinMonoid",
    "LinComonoid",
    "LinHopf",
    "standard_space",
    "cotangent_space",
    "point_space",
    "dual",
    "direct_sum",
    "span",
    "whole",
    "zero",
    "orth",
    "subspace_sum",
    "intersection",
    "contains",
    "is_subset",
    "classify_subspace",
    "lin_rel",
    "lin_graph",
    "lin_identity",
    "lin_transpose",
    "lin_swap",
    "lin_middle_swap",
    "lin_assoc",
    "cross_lin",
    "compose_lin",
    "chain_lin",
    "lin_equal",
    "dom_im",
    "reduce",
    "induced_iso",
    "factor",
    "cotangent_lift",
    "cotangent_split",
    "schwartz",
    "cotangent_comonoid",
    "vector_hopf",
    "check_lin_monoid",
    "check_lin_comonoid",
    "check_lin_hopf",
    "check_lin_comonoid_morphism",
    "ww_compose",
    "ww_two_term",
    "random_matrix",
    "random_lagrangian",
    "random_lin_rel",
    "darboux_basis",
]
