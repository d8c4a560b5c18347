"""
CANREL Core Groupoid
Squares whose right side and top edge are units, as a groupoid over the
double base.
"""

import logging

from canrel.core.errors import StructureError
from canrel.dbl.double import FinDoubleGroupoid, require_double
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.relcat.sets import Atom

logger = logging.getLogger(__name__)


def core_squares(d: FinDoubleGroupoid):
    H, V = d.side_h, d.side_v
    return d.squares.subset(
        f"C({d.id})", lambda s: H.is_unit(d.right(s)) and V.is_unit(d.top(s))
    )


def core_product(d: FinDoubleGroupoid, s: Atom, t: Atom) -> Atom:
    """Fill the 2x2 grid s | 1^H(bottom t) over 1^V(left t) | t and compose."""
    lower = d.hcomp(s, d.vunit(d.bottom(t)))
    upper = d.hcomp(d.hunit(d.left(t)), t)
    return d.vcomp(lower, upper)


def core(d: FinDoubleGroupoid) -> FinGroupoid:
    require_double(d)
    H = d.side_h
    arrows = core_squares(d)
    source = {s: H.source[d.right(s)] for s in arrows}
    target = {s: H.target[d.left(s)] for s in arrows}
    members = set(arrows)
    comp = {}
    for s in arrows:
        for t in arrows:
            if source[s] != target[t]:
                continue
            st = core_product(d, s, t)
            if st not in members:
                raise StructureError(f"{d.id}: core product of {s!r} and {t!r} leaves the core")
            comp[(s, t)] = st
    unit = {m: d.double_unit(m) for m in d.base}
    inv = {}
    for s in arrows:
        found = [t for t in arrows if comp.get((s, t)) == unit[target[s]]]
        if len(found) != 1:
            raise StructureError(f"{d.id}: core square {s!r} has {len(found)} inverses")
        inv[s] = found[0]
    result = FinGroupoid(
        arrows=arrows,
        objects=d.base,
        source=source,
        target=target,
        unit=unit,
        comp=comp,
        inv=inv,
        id=f"core({d.id})",
    )
    logger.debug("core(%s): %d arrows over %d objects", d.id, len(arrows), len(d.base))
    return require_valid(result)
