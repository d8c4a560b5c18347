"""
CANREL Relation Category
Finite sets, relations and brute-force axiom checkers.
"""

from canrel.relcat.checks import (
    check_action,
    check_comonoid,
    check_comonoid_morphism,
    check_hopf,
    check_monoid,
    check_simplicial,
    check_star,
    check_star_simplicial,
    diagonal_comonoid,
    star_flags,
)
from canrel.relcat.relations import (
    Rel,
    assoc,
    chain,
    classify,
    compose,
    compose_sharp,
    counit,
    cross,
    diagonal,
    domain,
    empty,
    equal,
    full,
    graph,
    identity,
    image,
    middle_swap,
    swap,
    transpose,
    unit_left,
    unit_right,
)
from canrel.relcat.sets import FinSet, point, product
from canrel.relcat.structures import RelComonoid, RelMonoid, SimplicialRel, StarStructure

__all__ = [
    "FinSet",
    "point",
    "product",
    "Rel",
    "compose",
    "compose_sharp",
    "chain",
    "transpose",
    "cross",
    "classify",
    "identity",
    "full",
    "empty",
    "graph",
    "diagonal",
    "counit",
    "swap",
    "assoc",
    "unit_left",
    "unit_right",
    "middle_swap",
    "equal",
    "domain",
    "image",
    "RelMonoid",
    "RelComonoid",
    "StarStructure",
    "SimplicialRel",
    "check_monoid",
    "check_comonoid",
    "check_star",
    "star_flags",
    "check_hopf",
    "check_action",
    "check_simplicial",
    "check_star_simplicial",
    "check_comonoid_morphism",
    "diagonal_comonoid",
]
