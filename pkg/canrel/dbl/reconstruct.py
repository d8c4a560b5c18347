"""
CANREL Double Reconstruction
Rebuild a double groupoid from its hopfoid and compare doubles up to
isomorphism.
"""

import logging
from typing import Dict, Optional, Tuple

from canrel.dbl.double import FinDoubleGroupoid, require_double, transpose_double
from canrel.dbl.hopfoid import Hopfoid
from canrel.grpd.bridge import from_star_monoid
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.grpd.iso import find_joint_isomorphism, is_isomorphism
from canrel.relcat.relations import chain, transpose
from canrel.relcat.sets import Atom, FinSet
from canrel.relcat.structures import RelMonoid, StarStructure

logger = logging.getLogger(__name__)


def _side(structure: FinGroupoid, arrows: FinSet, objects: FinSet, id: str) -> FinGroupoid:
    """`structure` restricted to the unit squares of the other composition."""
    keep = set(arrows)
    side = FinGroupoid(
        arrows=arrows,
        objects=objects,
        source={a: structure.source[a] for a in arrows},
        target={a: structure.target[a] for a in arrows},
        unit={x: structure.unit[x] for x in objects},
        comp={
            (a, b): ab
            for (a, b), ab in structure.comp.items()
            if a in keep and b in keep
        },
        inv={a: structure.inv[a] for a in arrows},
        id=id,
    )
    return require_valid(side)


def from_hopfoid(h: Hopfoid, id: Optional[str] = None) -> Tuple[FinDoubleGroupoid, bool]:
    """
    Reconstruct a double groupoid from a hopfoid.

    The coproduct gives the vertical structure, the product the horizontal
    one. Sides are the unit squares of the opposite structure, and the base
    is the set of squares that are units for both. The result is oriented so
    that the horizontal side has no more arrows than the vertical side.

    Returns:
        (double, transposed) where `transposed` says whether the
        reconstruction was transposed to reach the canonical orientation

    Raises:
        ValidationFailed: If the comonoid or monoid is not a strongly positive
            star structure
        ReconstructionError: If a unit witness is missing or not unique
    """
    name = id or f"rec({h.id})"
    S = h.carrier
    vstruct = from_star_monoid(
        RelMonoid(S, transpose(h.coproduct), transpose(h.carrier_counit)),
        StarStructure(S, h.carrier_star),
        id=f"{name}|v",
    )
    hstruct = from_star_monoid(
        RelMonoid(S, h.product, h.unit_image()),
        StarStructure(S, chain(h.carrier_star, h.antipode)),
        id=f"{name}|h",
    )
    h_arrows = FinSet(f"{name}.H", hstruct.objects.elements)
    v_arrows = FinSet(f"{name}.V", vstruct.objects.elements)
    v_members = set(v_arrows)
    base = FinSet(f"{name}.M", (s for s in S if s in v_members and s in h_arrows))
    side_h = _side(vstruct, h_arrows, base, f"{name}.H")
    side_v = _side(hstruct, v_arrows, base, f"{name}.V")
    d = require_double(FinDoubleGroupoid(S, side_h, side_v, hstruct, vstruct, id=name))
    transposed = len(side_h.arrows) > len(side_v.arrows)
    if transposed:
        d = require_double(transpose_double(d))
    logger.debug(
        "from_hopfoid(%s): %d squares, sides %d/%d, transposed=%s",
        h.id, len(S), len(d.side_h.arrows), len(d.side_v.arrows), transposed,
    )
    return d, transposed


def find_double_isomorphism(
    d1: FinDoubleGroupoid,
    d2: FinDoubleGroupoid,
    hint: Optional[Dict[Atom, Atom]] = None,
) -> Optional[Dict[str, Dict[Atom, Atom]]]:
    """A square bijection preserving both structures, with the induced side maps.

    Returns:
        {"squares", "horizontal", "vertical", "objects"} or None
    """
    found = find_joint_isomorphism([(d1.hstruct, d2.hstruct), (d1.vstruct, d2.vstruct)], hint=hint)
    if found is None:
        return None
    (h_map, v_map), squares = found
    objects = {m: d2.side_h.source[h_map[d1.side_h.unit[m]]] for m in d1.base}
    if not (
        is_isomorphism(d1.side_h, d2.side_h, h_map, objects)
        and is_isomorphism(d1.side_v, d2.side_v, v_map, objects)
    ):
        logger.warning("%s ~ %s: square bijection does not respect the sides", d1.id, d2.id)
        return None
    return {"squares": squares, "horizontal": h_map, "vertical": v_map, "objects": objects}
