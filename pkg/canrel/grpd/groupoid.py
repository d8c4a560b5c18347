"""
CANREL Finite Groupoids
The FinGroupoid type, its axiom validator and orbit/isotropy extraction.

Conventions: target (ℓ) and source (r); g and h are composable when
r(g) = ℓ(h), and then ℓ(gh) = ℓ(g), r(gh) = r(h).
"""

import logging
from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Dict, Iterable, List, Optional, Tuple

from canrel.core.errors import StructureError, ValidationFailed
from canrel.core.report import Report
from canrel.grpd.groups import GroupTable
from canrel.relcat.sets import Atom, FinSet

logger = logging.getLogger(__name__)

Triple = Tuple[Atom, Atom, Atom]


def comp_table(triples: Iterable[Triple], what: str = "groupoid") -> Dict[Tuple[Atom, Atom], Atom]:
    """Index composition triples; a pair with two different products is malformed."""
    table: Dict[Tuple[Atom, Atom], Atom] = {}
    for g, h, gh in triples:
        if table.get((g, h), gh) != gh:
            raise StructureError(f"{what}: product of {g!r} and {h!r} is multi-valued")
        table[(g, h)] = gh
    return table


@dataclass
class FinGroupoid:
    arrows: FinSet
    objects: FinSet
    source: Dict[Atom, Atom]
    target: Dict[Atom, Atom]
    unit: Dict[Atom, Atom]
    comp: Dict[Tuple[Atom, Atom], Atom]
    inv: Dict[Atom, Atom]
    id: str = field(default="G", compare=False)

    def __post_init__(self):
        name = self.id
        for table, dom, cod, label in (
            (self.source, self.arrows, self.objects, "source"),
            (self.target, self.arrows, self.objects, "target"),
            (self.inv, self.arrows, self.arrows, "inverse"),
            (self.unit, self.objects, self.arrows, "unit"),
        ):
            for k, v in table.items():
                if k not in dom:
                    raise StructureError(f"{name}: {label} table mentions unknown {k!r}")
                if v not in cod:
                    raise StructureError(f"{name}: {label} of {k!r} is unknown {v!r}")
            missing = [x for x in dom if x not in table]
            if missing:
                raise StructureError(f"{name}: {label} undefined on {missing[0]!r}")
        for (g, h), gh in self.comp.items():
            for x in (g, h, gh):
                if x not in self.arrows:
                    raise StructureError(f"{name}: composition mentions unknown arrow {x!r}")

    def composable(self, g: Atom, h: Atom) -> bool:
        return self.source[g] == self.target[h]

    def mul(self, g: Atom, h: Atom) -> Atom:
        try:
            return self.comp[(g, h)]
        except KeyError:
            raise StructureError(f"{self.id}: {g!r} and {h!r} are not composable") from None

    def is_unit(self, g: Atom) -> bool:
        return self.unit[self.source[g]] == g

    def hom(self, x: Atom, y: Atom) -> List[Atom]:
        """Arrows with target x and source y."""
        return [g for g in self.arrows if self.target[g] == x and self.source[g] == y]

    def loops(self, x: Atom) -> List[Atom]:
        return self.hom(x, x)

    def triples(self) -> List[Triple]:
        key = self.arrows.index
        return sorted(
            ((g, h, gh) for (g, h), gh in self.comp.items()),
            key=lambda t: (key(t[0]), key(t[1])),
        )

    @property
    def units(self) -> List[Atom]:
        return [self.unit[x] for x in self.objects]

    def __repr__(self) -> str:
        return f"FinGroupoid({self.id!r}, arrows={len(self.arrows)}, objects={len(self.objects)})"


def validate(g: FinGroupoid) -> Report:
    """Check the groupoid axioms, one named check per axiom family."""
    report = Report(f"groupoid:{g.id}")
    src, tgt, unit, inv, comp = g.source, g.target, g.unit, g.inv, g.comp

    bad = next((x for x in g.objects if tgt[unit[x]] != x or src[unit[x]] != x), None)
    report.add("unit-endpoints", bad is None, bad)

    bad = None
    for a, b in iproduct(g.arrows, repeat=2):
        if ((a, b) in comp) != (src[a] == tgt[b]):
            bad = (a, b)
            break
    report.add("comp-domain", bad is None, bad)

    bad = next(
        ((a, b, ab) for (a, b), ab in comp.items() if tgt[ab] != tgt[a] or src[ab] != src[b]),
        None,
    )
    report.add("comp-endpoints", bad is None, bad)

    bad = None
    for (a, b), ab in comp.items():
        for c in g.arrows:
            if (b, c) not in comp:
                continue
            left = comp.get((ab, c))
            right = comp.get((a, comp[(b, c)]))
            if left is None or left != right:
                bad = (a, b, c)
                break
        if bad:
            break
    report.add("associativity", bad is None, bad)

    bad = next(
        (
            a
            for a in g.arrows
            if comp.get((unit[tgt[a]], a)) != a or comp.get((a, unit[src[a]])) != a
        ),
        None,
    )
    report.add("unit-laws", bad is None, bad)

    bad = next(
        (
            a
            for a in g.arrows
            if comp.get((a, inv[a])) != unit[tgt[a]] or comp.get((inv[a], a)) != unit[src[a]]
        ),
        None,
    )
    report.add("inverse-laws", bad is None, bad)

    seen: Dict[Atom, Atom] = {}
    bad = None
    for x in g.objects:
        if unit[x] in seen:
            bad = (seen[unit[x]], x)
            break
        seen[unit[x]] = x
    report.add("unit-injective", bad is None, bad)
    return report


def require_valid(g: FinGroupoid) -> FinGroupoid:
    report = validate(g)
    if not report.passed:
        raise ValidationFailed(f"{g.id} is not a groupoid: {report.failures[0].name}", report)
    return g


def orbits(g: FinGroupoid) -> List[Tuple[Atom, ...]]:
    """Orbit partition of the objects, each orbit in canonical order."""
    parent = {x: x for x in g.objects}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in g.arrows:
        ra, rb = find(g.target[a]), find(g.source[a])
        if ra != rb:
            parent[max(ra, rb, key=g.objects.index)] = min(ra, rb, key=g.objects.index)
    classes: Dict[Atom, List[Atom]] = {}
    for x in g.objects:
        classes.setdefault(find(x), []).append(x)
    return [tuple(c) for c in classes.values()]


def isotropy(g: FinGroupoid, p: Atom) -> GroupTable:
    loops = tuple(g.loops(p))
    return GroupTable(loops, {(a, b): g.comp[(a, b)] for a in loops for b in loops}, f"{g.id}_{p}")


def orbits_and_isotropy(g: FinGroupoid) -> Tuple[List[Tuple[Atom, ...]], Dict[Atom, GroupTable]]:
    require_valid(g)
    return orbits(g), {p: isotropy(g, p) for p in g.objects}


def restrict_to_objects(g: FinGroupoid, keep: Iterable[Atom], id: Optional[str] = None) -> FinGroupoid:
    """Full subgroupoid on the given objects."""
    keep = set(keep)
    arrows = g.arrows.subset(f"{g.id}|", lambda a: g.source[a] in keep and g.target[a] in keep)
    objects = g.objects.subset(f"{g.id}|0", lambda x: x in keep)
    members = set(arrows)
    return FinGroupoid(
        arrows=arrows,
        objects=objects,
        source={a: g.source[a] for a in arrows},
        target={a: g.target[a] for a in arrows},
        unit={x: g.unit[x] for x in objects},
        comp={k: v for k, v in g.comp.items() if k[0] in members and k[1] in members},
        inv={a: g.inv[a] for a in arrows},
        id=id or f"{g.id}|",
    )
