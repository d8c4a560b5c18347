"""
CANREL Double Groupoids
Finite double groupoids, their cores and hopfoids, reconstruction, induced
groupoids and the hopfoid nerve.
"""

from canrel.dbl.core_groupoid import core, core_product, core_squares
from canrel.dbl.double import FinDoubleGroupoid, require_double, transpose_double, validate_double
from canrel.dbl.examples import (
    CrossedModule,
    DoubleKind,
    build_examples,
    check_crossed,
    crossed,
    dinertia,
    dmain,
    inclusion_crossed,
    product_double,
    trivial_crossed,
)
from canrel.dbl.hopfoid import (
    Hopfoid,
    check_hopfoid,
    core_via_hopfoid,
    group_shaped_hopfoid,
    hopfoid_dual,
    to_hopfoid,
)
from canrel.dbl.induced import check_double_lemmas, induced_groupoid, orbit_partition
from canrel.dbl.reconstruct import find_double_isomorphism, from_hopfoid
from canrel.dbl.simplicial import hopfoid_simplicial

__all__ = [
    "FinDoubleGroupoid",
    "Hopfoid",
    "CrossedModule",
    "DoubleKind",
    "validate_double",
    "require_double",
    "transpose_double",
    "core",
    "core_squares",
    "core_product",
    "build_examples",
    "check_crossed",
    "dmain",
    "dinertia",
    "crossed",
    "product_double",
    "trivial_crossed",
    "inclusion_crossed",
    "to_hopfoid",
    "check_hopfoid",
    "hopfoid_dual",
    "core_via_hopfoid",
    "group_shaped_hopfoid",
    "from_hopfoid",
    "find_double_isomorphism",
    "induced_groupoid",
    "orbit_partition",
    "check_double_lemmas",
    "hopfoid_simplicial",
]
