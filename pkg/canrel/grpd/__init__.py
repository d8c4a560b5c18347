"""
CANREL Groupoids
Finite groupoids, their standard constructions, nerves, bridges into Rel,
actions and bibundles.
"""

from canrel.grpd.actions import (
    GroupoidAction,
    action_groupoid,
    conjugation_action,
    target_action,
    validate_action,
)
from canrel.grpd.bibundle import (
    Bibundle,
    bibundle_check,
    isotropy_bibundle,
    self_bibundle,
    validate_bibundle,
)
from canrel.grpd.bridge import (
    action_bridge,
    extract_action,
    from_star_monoid,
    round_trip,
    to_star_comonoid,
    to_star_monoid,
)
from canrel.grpd.groupoid import (
    FinGroupoid,
    isotropy,
    orbits,
    orbits_and_isotropy,
    require_valid,
    validate,
)
from canrel.grpd.groups import GroupTable, cyclic, dihedral, direct_product, quaternion, symmetric
from canrel.grpd.iso import find_isomorphism, is_isomorphism, morita_invariants
from canrel.grpd.nerve import nerve, nerve_inversions
from canrel.grpd.standard import (
    GroupoidKind,
    build_standard,
    disjoint_union,
    group_action_groupoid,
    group_groupoid,
    inertia,
    pair_groupoid,
    product_groupoid,
    trivial_groupoid,
)

__all__ = [
    "FinGroupoid",
    "GroupTable",
    "GroupoidKind",
    "GroupoidAction",
    "Bibundle",
    "validate",
    "require_valid",
    "orbits",
    "isotropy",
    "orbits_and_isotropy",
    "build_standard",
    "disjoint_union",
    "trivial_groupoid",
    "pair_groupoid",
    "group_groupoid",
    "group_action_groupoid",
    "product_groupoid",
    "inertia",
    "nerve",
    "nerve_inversions",
    "to_star_monoid",
    "to_star_comonoid",
    "from_star_monoid",
    "round_trip",
    "action_bridge",
    "extract_action",
    "action_groupoid",
    "conjugation_action",
    "target_action",
    "validate_action",
    "bibundle_check",
    "validate_bibundle",
    "self_bibundle",
    "isotropy_bibundle",
    "find_isomorphism",
    "is_isomorphism",
    "morita_invariants",
    "cyclic",
    "symmetric",
    "dihedral",
    "quaternion",
    "direct_product",
]
