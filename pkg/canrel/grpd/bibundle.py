"""
CANREL Bibundles
Commuting left/right groupoid actions and finite principality checks.
"""

from dataclasses import dataclass, field
from typing import Dict, Tuple

from canrel.core.report import Report
from canrel.grpd.actions import GroupoidAction, validate_action
from canrel.grpd.groupoid import FinGroupoid, isotropy
from canrel.grpd.standard import group_groupoid
from canrel.relcat.sets import Atom, FinSet


@dataclass
class Bibundle:
    """G acts on the left when r(g) = JL(b); K acts on the right when JR(b) = ℓ(k)."""

    left: FinGroupoid
    right: FinGroupoid
    total: FinSet
    left_moment: Dict[Atom, Atom]
    right_moment: Dict[Atom, Atom]
    left_act: Dict[Tuple[Atom, Atom], Atom]
    right_act: Dict[Tuple[Atom, Atom], Atom]
    id: str = field(default="B", compare=False)

    def __post_init__(self):
        for (b, k), c in self.right_act.items():
            self.total.require(b, "right-acted element")
            self.right.arrows.require(k, "right-acting arrow")
            self.total.require(c, "right action value")

    def left_action(self) -> GroupoidAction:
        return GroupoidAction(self.left, self.total, self.left_moment, self.left_act, id=f"{self.id}.left")

    def right_as_left(self) -> GroupoidAction:
        """The right action read as a left action of K by k·b = b·k⁻¹."""
        k = self.right
        act = {(k.inv[x], b): c for (b, x), c in self.right_act.items()}
        return GroupoidAction(k, self.total, self.right_moment, act, id=f"{self.id}.right")


def validate_bibundle(b: Bibundle) -> Report:
    report = Report(f"bibundle:{b.id}")
    report.extend("left", validate_action(b.left_action()))
    report.extend("right", validate_action(b.right_as_left()))

    bad = None
    for (g, x), gx in b.left_act.items():
        for (y, k), yk in b.right_act.items():
            if y != x:
                continue
            first = b.right_act.get((gx, k))
            second = b.left_act.get((g, yk))
            if first is None or first != second:
                bad = (g, x, k)
                break
        if bad:
            break
    report.add("actions-commute", bad is None, bad)

    bad = next(
        (x for (x, k), xk in b.right_act.items() if b.left_moment[xk] != b.left_moment[x]),
        None,
    )
    report.add("left-moment-invariant", bad is None, bad)
    bad = next(
        (x for (g, x), gx in b.left_act.items() if b.right_moment[gx] != b.right_moment[x]),
        None,
    )
    report.add("right-moment-invariant", bad is None, bad)
    return report


def _unique_translations(total, moment, act, right: bool) -> bool:
    """Each pair in one fibre of `moment` is related by exactly one arrow."""
    for x in total:
        for y in total:
            if moment[x] != moment[y]:
                continue
            movers = [
                key[1] if right else key[0]
                for key, value in act.items()
                if value == y and (key[0] if right else key[1]) == x
            ]
            if len(movers) != 1:
                return False
    return True


def bibundle_check(b: Bibundle) -> Dict[str, bool]:
    right_principal = set(b.left_moment.values()) == set(b.left.objects) and _unique_translations(
        b.total, b.left_moment, b.right_act, right=True
    )
    left_principal = set(b.right_moment.values()) == set(b.right.objects) and _unique_translations(
        b.total, b.right_moment, b.left_act, right=False
    )
    return {
        "left_principal": left_principal,
        "right_principal": right_principal,
        "biprincipal": left_principal and right_principal,
    }


def self_bibundle(g: FinGroupoid) -> Bibundle:
    """G acting on its arrows by left and right multiplication."""
    return Bibundle(
        left=g,
        right=g,
        total=g.arrows,
        left_moment=dict(g.target),
        right_moment=dict(g.source),
        left_act=dict(g.comp),
        right_act=dict(g.comp),
        id=f"self({g.id})",
    )


def isotropy_bibundle(g: FinGroupoid, p: Atom) -> Bibundle:
    """G against its isotropy group at p, through the arrows with source p."""
    group = group_groupoid(isotropy(g, p), id=f"{g.id}_{p}")
    total = g.arrows.subset(f"r^-1({p})", lambda a: g.source[a] == p)
    members = set(total)
    (point,) = group.objects.elements
    return Bibundle(
        left=g,
        right=group,
        total=total,
        left_moment={b: g.target[b] for b in total},
        right_moment={b: point for b in total},
        left_act={(x, b): g.comp[(x, b)] for x in g.arrows for b in total if g.source[x] == g.target[b]},
        right_act={(b, k): g.comp[(b, k)] for b in members for k in group.arrows},
        id=f"iso({g.id},{p})",
    )
