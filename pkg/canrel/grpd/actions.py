"""
CANREL Groupoid Actions
Left actions with a moment map, their validator and action groupoids.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from canrel.core.errors import StructureError
from canrel.core.report import Report
from canrel.grpd.groupoid import FinGroupoid
from canrel.relcat.sets import Atom, FinSet


@dataclass
class GroupoidAction:
    """g acts on n when r(g) = J(n); the result lies over ℓ(g)."""

    groupoid: FinGroupoid
    space: FinSet
    moment: Dict[Atom, Atom]
    act: Dict[Tuple[Atom, Atom], Atom]
    id: str = field(default="action", compare=False)

    def __post_init__(self):
        g = self.groupoid
        for n, x in self.moment.items():
            self.space.require(n, "moment argument")
            g.objects.require(x, "moment value")
        missing = [n for n in self.space if n not in self.moment]
        if missing:
            raise StructureError(f"{self.id}: moment undefined on {missing[0]!r}")
        for (a, n), m in self.act.items():
            g.arrows.require(a, "acting arrow")
            self.space.require(n, "acted element")
            self.space.require(m, "action value")

    def triples(self):
        key_a, key_n = self.groupoid.arrows.index, self.space.index
        return sorted(
            ((a, n, m) for (a, n), m in self.act.items()),
            key=lambda t: (key_a(t[0]), key_n(t[1])),
        )


def validate_action(a: GroupoidAction) -> Report:
    g, J, act = a.groupoid, a.moment, a.act
    report = Report(f"action:{a.id}")

    bad = next(
        (
            (x, n)
            for x in g.arrows
            for n in a.space
            if ((x, n) in act) != (g.source[x] == J[n])
        ),
        None,
    )
    report.add("defined-domain", bad is None, bad)

    bad = next(((x, n) for (x, n), m in act.items() if J[m] != g.target[x]), None)
    report.add("moment", bad is None, bad)

    bad = next((n for n in a.space if act.get((g.unit[J[n]], n)) != n), None)
    report.add("unit", bad is None, bad)

    bad = None
    for (x, y), xy in g.comp.items():
        for n in a.space:
            if (y, n) not in act:
                continue
            if act.get((x, act[(y, n)])) != act.get((xy, n)):
                bad = (x, y, n)
                break
        if bad:
            break
    report.add("compatibility", bad is None, bad)
    return report


def action_groupoid(a: GroupoidAction, id: str = None) -> FinGroupoid:
    """Arrows (g, n) from n to g·n; (g, h·n)(h, n) = (gh, n)."""
    g, act = a.groupoid, a.act
    arrows = FinSet(
        f"{g.id}x{a.space.id}",
        ((x, n) for x in g.arrows for n in a.space if (x, n) in act),
    )
    comp = {}
    for (x, y), xy in g.comp.items():
        for n in a.space:
            if (y, n) in act and (x, act[(y, n)]) in act:
                comp[((x, act[(y, n)]), (y, n))] = (xy, n)
    return FinGroupoid(
        arrows=arrows,
        objects=a.space,
        source={(x, n): n for x, n in arrows},
        target={(x, n): act[(x, n)] for x, n in arrows},
        unit={n: (g.unit[a.moment[n]], n) for n in a.space},
        comp=comp,
        inv={(x, n): (g.inv[x], act[(x, n)]) for x, n in arrows},
        id=id or f"{g.id}|{a.space.id}",
    )


def target_action(g: FinGroupoid) -> GroupoidAction:
    """G acting on its base: g·r(g) = ℓ(g)."""
    return GroupoidAction(
        groupoid=g,
        space=g.objects,
        moment={x: x for x in g.objects},
        act={(a, g.source[a]): g.target[a] for a in g.arrows},
        id=f"{g.id}-on-base",
    )


def conjugation_action(g: FinGroupoid) -> GroupoidAction:
    """G acting on its loops LG by conjugation, moment = ℓ."""
    loops = g.arrows.subset(f"L{g.id}", lambda x: g.source[x] == g.target[x])
    act = {}
    for a in g.arrows:
        for x in loops:
            if g.source[a] == g.target[x]:
                act[(a, x)] = g.comp[(g.comp[(a, x)], g.inv[a])]
    return GroupoidAction(
        groupoid=g,
        space=loops,
        moment={x: g.target[x] for x in loops},
        act=act,
        id=f"conj-{g.id}",
    )
