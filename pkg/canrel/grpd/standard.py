"""
CANREL Standard Groupoids
Trivial, pair, group, action, product and inertia groupoids.
"""

import enum
import logging
from typing import Any, Callable, Dict, Iterable, Tuple

from canrel.grpd.actions import GroupoidAction, action_groupoid, conjugation_action
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.grpd.groups import GroupTable
from canrel.relcat.sets import POINT, Atom, FinSet

logger = logging.getLogger(__name__)


class GroupoidKind(str, enum.Enum):
    """Supported standard constructions."""

    TRIVIAL = "trivial"
    PAIR = "pair"
    GROUP = "group"
    ACTION = "action"


def trivial_groupoid(objects: FinSet, id: str = None) -> FinGroupoid:
    return FinGroupoid(
        arrows=FinSet(objects.id, objects.elements),
        objects=objects,
        source={x: x for x in objects},
        target={x: x for x in objects},
        unit={x: x for x in objects},
        comp={(x, x): x for x in objects},
        inv={x: x for x in objects},
        id=id or f"triv({objects.id})",
    )


def pair_groupoid(objects: FinSet, id: str = None) -> FinGroupoid:
    """Arrows (x, y) from y to x; (x, y)(y, z) = (x, z)."""
    arrows = FinSet(f"{objects.id}^2", ((x, y) for x in objects for y in objects))
    return FinGroupoid(
        arrows=arrows,
        objects=objects,
        source={(x, y): y for x, y in arrows},
        target={(x, y): x for x, y in arrows},
        unit={x: (x, x) for x in objects},
        comp={((x, y), (y, z)): (x, z) for x in objects for y in objects for z in objects},
        inv={(x, y): (y, x) for x, y in arrows},
        id=id or f"pair({objects.id})",
    )


def group_groupoid(table: GroupTable, id: str = None) -> FinGroupoid:
    arrows = FinSet(table.name, table.elements)
    return FinGroupoid(
        arrows=arrows,
        objects=FinSet("pt", (POINT,)),
        source={a: POINT for a in arrows},
        target={a: POINT for a in arrows},
        unit={POINT: table.identity},
        comp=dict(table.mul),
        inv={a: table.inverse(a) for a in arrows},
        id=id or table.name,
    )


def group_action_groupoid(
    table: GroupTable, space: FinSet, act: Dict[Tuple[Atom, Atom], Atom], id: str = None
) -> FinGroupoid:
    """Arrows (k, p) from p to k·p for a left group action."""
    g = group_groupoid(table)
    action = GroupoidAction(
        groupoid=g,
        space=space,
        moment={p: POINT for p in space},
        act=dict(act),
        id=f"{table.name}-on-{space.id}",
    )
    return action_groupoid(action, id=id or f"{table.name}|{space.id}")


def product_groupoid(g1: FinGroupoid, g2: FinGroupoid, id: str = None) -> FinGroupoid:
    arrows = FinSet(f"{g1.arrows.id}x{g2.arrows.id}", ((a, b) for a in g1.arrows for b in g2.arrows))
    objects = FinSet(f"{g1.objects.id}x{g2.objects.id}", ((x, y) for x in g1.objects for y in g2.objects))
    comp = {
        ((a1, a2), (b1, b2)): (ab1, ab2)
        for (a1, b1), ab1 in g1.comp.items()
        for (a2, b2), ab2 in g2.comp.items()
    }
    return FinGroupoid(
        arrows=arrows,
        objects=objects,
        source={(a, b): (g1.source[a], g2.source[b]) for a, b in arrows},
        target={(a, b): (g1.target[a], g2.target[b]) for a, b in arrows},
        unit={(x, y): (g1.unit[x], g2.unit[y]) for x, y in objects},
        comp=comp,
        inv={(a, b): (g1.inv[a], g2.inv[b]) for a, b in arrows},
        id=id or f"{g1.id}x{g2.id}",
    )


def disjoint_union(*groupoids: FinGroupoid, id: str = None) -> FinGroupoid:
    """Component i contributes arrows and objects tagged (i, x)."""
    return FinGroupoid(
        arrows=FinSet("+".join(g.arrows.id for g in groupoids), ((i, a) for i, g in enumerate(groupoids) for a in g.arrows)),
        objects=FinSet("+".join(g.objects.id for g in groupoids), ((i, x) for i, g in enumerate(groupoids) for x in g.objects)),
        source={(i, a): (i, g.source[a]) for i, g in enumerate(groupoids) for a in g.arrows},
        target={(i, a): (i, g.target[a]) for i, g in enumerate(groupoids) for a in g.arrows},
        unit={(i, x): (i, g.unit[x]) for i, g in enumerate(groupoids) for x in g.objects},
        comp={((i, a), (i, b)): (i, ab) for i, g in enumerate(groupoids) for (a, b), ab in g.comp.items()},
        inv={(i, a): (i, g.inv[a]) for i, g in enumerate(groupoids) for a in g.arrows},
        id=id or "+".join(g.id for g in groupoids),
    )


def inertia(g: FinGroupoid) -> FinGroupoid:
    """Action groupoid of G acting on its loops by conjugation."""
    require_valid(g)
    result = action_groupoid(conjugation_action(g), id=f"inertia({g.id})")
    logger.debug("inertia(%s): %d arrows over %d loops", g.id, len(result.arrows), len(result.objects))
    return result


def _build_trivial(data: Any) -> FinGroupoid:
    return trivial_groupoid(_as_set(data))


def _build_pair(data: Any) -> FinGroupoid:
    return pair_groupoid(_as_set(data))


def _build_group(data: Any) -> FinGroupoid:
    return group_groupoid(data)


def _build_action(data: Any) -> FinGroupoid:
    table, space, act = data
    return group_action_groupoid(table, _as_set(space), act)


def _as_set(data: Any) -> FinSet:
    if isinstance(data, FinSet):
        return data
    return FinSet("M", tuple(data))


BUILDERS: Dict[GroupoidKind, Callable[[Any], FinGroupoid]] = {
    GroupoidKind.TRIVIAL: _build_trivial,
    GroupoidKind.PAIR: _build_pair,
    GroupoidKind.GROUP: _build_group,
    GroupoidKind.ACTION: _build_action,
}


def build_standard(kind: Any, data: Any) -> FinGroupoid:
    """
    Build a standard groupoid.

    Args:
        kind: trivial | pair | group | action
        data: a set of objects (trivial, pair), a GroupTable (group), or a
            (GroupTable, objects, {(k, p): k·p}) triple (action)

    Raises:
        ValueError: If the kind is not supported
        ValidationFailed: If the result violates the groupoid axioms
    """
    try:
        kind = GroupoidKind(kind)
    except ValueError:
        supported = ", ".join(k.value for k in GroupoidKind)
        raise ValueError(f"Unsupported groupoid kind: {kind}. Supported: {supported}") from None
    return require_valid(BUILDERS[kind](data))


def get_supported_kinds() -> Iterable[str]:
    return [k.value for k in GroupoidKind]
