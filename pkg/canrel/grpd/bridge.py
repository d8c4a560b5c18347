"""
CANREL Groupoid Bridges
Groupoids as strongly positive star monoids in Rel, and back; actions as
relations S x Q -> Q, and back.
"""

import logging
from typing import Dict, Optional, Tuple

from canrel.core.errors import ReconstructionError, ValidationFailed
from canrel.grpd.actions import GroupoidAction
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.relcat.checks import check_action, check_monoid, check_star
from canrel.relcat.relations import Rel, graph, transpose
from canrel.relcat.sets import POINT, Atom, FinSet, point, product
from canrel.relcat.structures import RelComonoid, RelMonoid, StarStructure

logger = logging.getLogger(__name__)


def to_star_monoid(g: FinGroupoid) -> Tuple[RelMonoid, StarStructure]:
    require_valid(g)
    s = g.arrows
    mult = Rel(product(s, s), s, (((a, b), ab) for (a, b), ab in g.comp.items()), name="m")
    unit = Rel(point(), s, ((POINT, e) for e in g.units), name="e")
    star = graph(s, s, g.inv, name="i")
    return RelMonoid(s, mult, unit), StarStructure(s, star)


def to_star_comonoid(g: FinGroupoid) -> Tuple[RelComonoid, StarStructure]:
    monoid, star = to_star_monoid(g)
    return (
        RelComonoid(monoid.carrier, transpose(monoid.product), transpose(monoid.unit)),
        star,
    )


def from_star_monoid(
    m: RelMonoid,
    s: StarStructure,
    base_labels: Optional[Dict[Atom, Atom]] = None,
    id: str = "G",
) -> FinGroupoid:
    """
    Rebuild the groupoid of a strongly positive star monoid.

    The base is the unit image; `base_labels` renames unit arrows to object
    names. ℓ(g) and r(g) are the unique units absorbed on the left and right.

    Raises:
        ValidationFailed: If the monoid or star checks fail
        ReconstructionError: If a product is multi-valued or a unit witness is
            missing or not unique
    """
    report = check_monoid(m, subject=f"monoid:{id}")
    report.extend("star", check_star(s, m))
    if not report.passed:
        raise ValidationFailed(f"{id}: not a strongly positive star monoid", report)

    carrier = m.carrier
    units = [e for e in carrier if e in m.unit.image(POINT)]
    labels = base_labels or {}
    name = lambda e: labels.get(e, e)  # noqa: E731

    comp = {}
    for pair in m.product.src:
        values = m.product.image(pair)
        if len(values) > 1:
            raise ReconstructionError(f"{id}: product of {pair!r} is multi-valued", pair)
        if values:
            comp[pair] = next(iter(values))

    def absorbing(g: Atom, left: bool) -> Atom:
        found = [u for u in units if comp.get((u, g) if left else (g, u)) == g]
        if len(found) != 1:
            side = "target" if left else "source"
            raise ReconstructionError(f"{id}: {side} of {g!r} has {len(found)} unit witnesses", g)
        return found[0]

    target = {g: name(absorbing(g, True)) for g in carrier}
    source = {g: name(absorbing(g, False)) for g in carrier}
    objects = FinSet(f"{id}0", (name(u) for u in units))
    inv = {}
    for g in carrier:
        values = s.star.image(g)
        if len(values) != 1:
            raise ReconstructionError(f"{id}: star of {g!r} is not single-valued", g)
        inv[g] = next(iter(values))
    result = FinGroupoid(
        arrows=carrier,
        objects=objects,
        source=source,
        target=target,
        unit={name(u): u for u in units},
        comp=comp,
        inv=inv,
        id=id,
    )
    logger.debug("from_star_monoid(%s): %d arrows over %d units", id, len(carrier), len(units))
    return result


def round_trip(g: FinGroupoid) -> FinGroupoid:
    """from_star_monoid after to_star_monoid, keeping the object names."""
    monoid, star = to_star_monoid(g)
    return from_star_monoid(monoid, star, {g.unit[x]: x for x in g.objects}, id=g.id)


def action_bridge(a: GroupoidAction) -> Rel:
    """The action as a relation arrows x space -> space."""
    return Rel(
        product(a.groupoid.arrows, a.space),
        a.space,
        (((x, n), m) for (x, n), m in a.act.items()),
        name="tau",
    )


def extract_action(g: FinGroupoid, tau: Rel, id: str = "action") -> GroupoidAction:
    """
    Recover a groupoid action from a relation passing check_action.

    J(q) is the unique unit u with q in τ(u, q).
    """
    monoid, _ = to_star_monoid(g)
    report = check_action(monoid, tau, subject=f"action:{id}")
    if not report.passed:
        raise ValidationFailed(f"{id}: relation is not an action", report)
    space = tau.dst
    moment = {}
    for q in space:
        found = [x for x in g.objects if q in tau.image((g.unit[x], q))]
        if len(found) != 1:
            raise ReconstructionError(f"{id}: moment of {q!r} has {len(found)} unit witnesses", q)
        moment[q] = found[0]
    act = {}
    for pair in tau.src:
        values = tau.image(pair)
        if len(values) > 1:
            raise ReconstructionError(f"{id}: action on {pair!r} is multi-valued", pair)
        if values:
            act[pair] = next(iter(values))
    return GroupoidAction(groupoid=g, space=space, moment=moment, act=act, id=id)
