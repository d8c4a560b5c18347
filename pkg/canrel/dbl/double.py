"""
CANREL Double Groupoids
FinDoubleGroupoid, its validator and transpose.

A square s has a left and a right side in H and a bottom and a top edge in V.
`hstruct` is the groupoid D ⇉ H (target = left side, source = right side,
composition = horizontal concatenation). `vstruct` is D ⇉ V (target =
bottom edge, source = top edge, composition stacks the second square on
top of the first).
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from canrel.core.errors import StructureError, ValidationFailed
from canrel.core.report import Report
from canrel.grpd.groupoid import FinGroupoid, validate
from canrel.relcat.sets import Atom, FinSet

logger = logging.getLogger(__name__)


@dataclass
class FinDoubleGroupoid:
    squares: FinSet
    side_h: FinGroupoid
    side_v: FinGroupoid
    hstruct: FinGroupoid
    vstruct: FinGroupoid
    id: str = field(default="D", compare=False)

    def __post_init__(self):
        if self.hstruct.arrows != self.squares or self.vstruct.arrows != self.squares:
            raise StructureError(f"{self.id}: both structures must live on the squares")
        if self.hstruct.objects != self.side_h.arrows:
            raise StructureError(f"{self.id}: horizontal structure must sit over the arrows of H")
        if self.vstruct.objects != self.side_v.arrows:
            raise StructureError(f"{self.id}: vertical structure must sit over the arrows of V")

    # edges and sides

    def left(self, s: Atom) -> Atom:
        return self.hstruct.target[s]

    def right(self, s: Atom) -> Atom:
        return self.hstruct.source[s]

    def bottom(self, s: Atom) -> Atom:
        return self.vstruct.target[s]

    def top(self, s: Atom) -> Atom:
        return self.vstruct.source[s]

    # the two compositions, units and inverses

    def hcomp(self, s: Atom, t: Atom) -> Atom:
        """s to the left of t."""
        return self.hstruct.mul(s, t)

    def vcomp(self, s: Atom, t: Atom) -> Atom:
        """s below t."""
        return self.vstruct.mul(s, t)

    def hunit(self, h: Atom) -> Atom:
        """Identity square for horizontal composition on the side h."""
        return self.hstruct.unit[h]

    def vunit(self, v: Atom) -> Atom:
        """Identity square for vertical composition on the edge v."""
        return self.vstruct.unit[v]

    def hinv(self, s: Atom) -> Atom:
        return self.hstruct.inv[s]

    def vinv(self, s: Atom) -> Atom:
        return self.vstruct.inv[s]

    def double_unit(self, m: Atom) -> Atom:
        return self.hunit(self.side_h.unit[m])

    @property
    def base(self) -> FinSet:
        return self.side_h.objects

    def __repr__(self) -> str:
        return f"FinDoubleGroupoid({self.id!r}, squares={len(self.squares)})"


def _first(items):
    return next(iter(items), None)


def validate_double(d: FinDoubleGroupoid) -> Report:
    report = Report(f"double:{d.id}")
    for name, g in (("sideH", d.side_h), ("sideV", d.side_v), ("hstruct", d.hstruct), ("vstruct", d.vstruct)):
        report.extend(name, validate(g))
    if not report.passed:
        return report

    H, V = d.side_h, d.side_v
    report.add(
        "objects-match",
        H.objects == V.objects,
        {"sideH": list(H.objects), "sideV": list(V.objects)},
    )
    if not report.passed:
        return report

    bad = _first(
        (s, t)
        for (s, t), st in d.hstruct.comp.items()
        for edge in (d.bottom, d.top)
        if V.comp.get((edge(s), edge(t))) != edge(st)
    )
    report.add("edge-maps-compose", bad is None, bad)
    bad = _first(
        h
        for h in H.arrows
        if d.bottom(d.hunit(h)) != V.unit[H.target[h]] or d.top(d.hunit(h)) != V.unit[H.source[h]]
    )
    report.add("edge-maps-units", bad is None, bad)
    bad = _first(
        s for s in d.squares for edge in (d.bottom, d.top) if edge(d.hinv(s)) != V.inv[edge(s)]
    )
    report.add("edge-maps-inverses", bad is None, bad)

    bad = _first(
        (s, t)
        for (s, t), st in d.vstruct.comp.items()
        for side in (d.left, d.right)
        if H.comp.get((side(s), side(t))) != side(st)
    )
    report.add("side-maps-compose", bad is None, bad)
    bad = _first(
        v
        for v in V.arrows
        if d.left(d.vunit(v)) != H.unit[V.target[v]] or d.right(d.vunit(v)) != H.unit[V.source[v]]
    )
    report.add("side-maps-units", bad is None, bad)
    bad = _first(
        s for s in d.squares for side in (d.left, d.right) if side(d.vinv(s)) != H.inv[side(s)]
    )
    report.add("side-maps-inverses", bad is None, bad)

    bad = _first(
        s
        for s in d.squares
        if V.target[d.bottom(s)] != H.target[d.left(s)]
        or V.source[d.bottom(s)] != H.target[d.right(s)]
        or V.target[d.top(s)] != H.source[d.left(s)]
        or V.source[d.top(s)] != H.source[d.right(s)]
    )
    report.add("corners", bad is None, bad)

    bad = _first(m for m in H.objects if d.hunit(H.unit[m]) != d.vunit(V.unit[m]))
    report.add("double-units", bad is None, bad)

    witness = interchange_witness(d)
    report.add("interchange", witness is None, witness)

    hit = {(d.right(s), d.top(s)) for s in d.squares}
    bad = _first(
        (h, v)
        for h in H.arrows
        for v in V.arrows
        if H.source[h] == V.source[v] and (h, v) not in hit
    )
    report.add("double-source", bad is None, bad)
    return report


def interchange_witness(d: FinDoubleGroupoid) -> Optional[List[Atom]]:
    """A 2x2 grid [s11, s12, s21, s22] (bottom row first) violating interchange."""
    by_bottom: Dict[Atom, List[Atom]] = defaultdict(list)
    for s in d.squares:
        by_bottom[d.bottom(s)].append(s)
    hcomp, vcomp = d.hstruct.comp, d.vstruct.comp
    for (s11, s12), row1 in hcomp.items():
        for s21 in by_bottom[d.top(s11)]:
            for s22 in by_bottom[d.top(s12)]:
                row2 = hcomp.get((s21, s22))
                if row2 is None:
                    continue
                col1 = vcomp.get((s11, s21))
                col2 = vcomp.get((s12, s22))
                first = vcomp.get((row1, row2))
                second = hcomp.get((col1, col2)) if col1 is not None and col2 is not None else None
                if first is None or first != second:
                    return [s11, s12, s21, s22]
    return None


def require_double(d: FinDoubleGroupoid) -> FinDoubleGroupoid:
    report = validate_double(d)
    if not report.passed:
        raise ValidationFailed(f"{d.id} is not a double groupoid: {report.failures[0].name}", report)
    return d


def transpose_double(d: FinDoubleGroupoid) -> FinDoubleGroupoid:
    """Reflect squares in the diagonal: sides and structures swap roles."""
    return FinDoubleGroupoid(
        squares=d.squares,
        side_h=d.side_v,
        side_v=d.side_h,
        hstruct=d.vstruct,
        vstruct=d.hstruct,
        id=f"{d.id}^t",
    )
