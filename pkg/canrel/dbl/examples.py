"""
CANREL Example Doubles
Factory for the standard double groupoids: main, inertia, crossed-module
and product doubles.
"""

import enum
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Tuple

from canrel.core.errors import ValidationFailed
from canrel.core.report import Report
from canrel.dbl.double import FinDoubleGroupoid, require_double
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.grpd.groups import GroupTable
from canrel.grpd.standard import group_groupoid, pair_groupoid, product_groupoid, trivial_groupoid
from canrel.relcat.sets import POINT, Atom, FinSet

logger = logging.getLogger(__name__)


class DoubleKind(str, enum.Enum):
    DMAIN = "dmain"
    DINERTIA = "dinertia"
    CROSSED = "crossed"
    PRODUCT = "product"


@dataclass
class CrossedModule:
    """t: H -> G with G acting on H by automorphisms phi[g]."""

    G: GroupTable
    H: GroupTable
    t: Dict[Atom, Atom]
    phi: Dict[Atom, Dict[Atom, Atom]]
    id: str = field(default="X", compare=False)


def check_crossed(c: CrossedModule) -> Report:
    G, H, t, phi = c.G, c.H, c.t, c.phi
    report = Report(f"crossed:{c.id}")
    bad = next(((a, b) for a in H for b in H if t[H(a, b)] != G(t[a], t[b])), None)
    report.add("t-homomorphism", bad is None, bad)
    bad = next(
        (
            (g, a, b)
            for g in G
            for a in H
            for b in H
            if phi[g][H(a, b)] != H(phi[g][a], phi[g][b])
        ),
        None,
    )
    if bad is None:
        bad = next((g for g in G if len(set(phi[g].values())) != len(H)), None)
    report.add("phi-automorphisms", bad is None, bad)
    bad = next(
        ((g, k, a) for g in G for k in G for a in H if phi[G(g, k)][a] != phi[g][phi[k][a]]),
        None,
    )
    if bad is None and any(phi[G.identity][a] != a for a in H):
        bad = (G.identity,)
    report.add("phi-action", bad is None, bad)
    bad = next(
        ((g, a) for g in G for a in H if t[phi[g][a]] != G(G(g, t[a]), G.inverse(g))),
        None,
    )
    report.add("peiffer-equivariance", bad is None, bad)
    bad = next(
        ((a, b) for a in H for b in H if phi[t[a]][b] != H(H(a, b), H.inverse(a))),
        None,
    )
    report.add("peiffer-identity", bad is None, bad)
    return report


def trivial_crossed(G: GroupTable, H: GroupTable) -> CrossedModule:
    """t constant at the identity, phi trivial; valid when H is abelian."""
    return CrossedModule(
        G=G,
        H=H,
        t={a: G.identity for a in H},
        phi={g: {a: a for a in H} for g in G},
        id=f"({G.name},{H.name},1,1)",
    )


def inclusion_crossed(G: GroupTable) -> CrossedModule:
    """t = id and phi = conjugation."""
    return CrossedModule(
        G=G,
        H=G,
        t={a: a for a in G},
        phi={g: {a: G(G(g, a), G.inverse(g)) for a in G} for g in G},
        id=f"({G.name},{G.name},id,conj)",
    )


def dmain(g: FinGroupoid) -> FinDoubleGroupoid:
    """G on the vertical edges, trivial sides: one square per arrow."""
    require_valid(g)
    squares = FinSet(f"D({g.id})", g.arrows.elements)
    side_h = trivial_groupoid(g.objects, id=f"triv({g.objects.id})")
    hstruct = FinGroupoid(
        arrows=squares,
        objects=side_h.arrows,
        source=dict(g.source),
        target=dict(g.target),
        unit=dict(g.unit),
        comp=dict(g.comp),
        inv=dict(g.inv),
        id=f"{g.id}|h",
    )
    vstruct = FinGroupoid(
        arrows=squares,
        objects=g.arrows,
        source={a: a for a in squares},
        target={a: a for a in squares},
        unit={a: a for a in g.arrows},
        comp={(a, a): a for a in squares},
        inv={a: a for a in squares},
        id=f"{g.id}|v",
    )
    return FinDoubleGroupoid(squares, side_h, g, hstruct, vstruct, id=f"dmain({g.id})")


def dinertia(g: FinGroupoid) -> FinDoubleGroupoid:
    """Squares (g, h): bottom g, top h, left (ℓg, ℓh), right (rg, rh)."""
    require_valid(g)
    side_h = pair_groupoid(g.objects)
    hstruct = product_groupoid(g, g, id=f"{g.id}x{g.id}")
    squares = FinSet(f"D({g.id})", hstruct.arrows.elements)
    hstruct = FinGroupoid(
        arrows=squares,
        objects=side_h.arrows,
        source=hstruct.source,
        target=hstruct.target,
        unit=hstruct.unit,
        comp=hstruct.comp,
        inv=hstruct.inv,
        id=hstruct.id,
    )
    pair = pair_groupoid(g.arrows)
    vstruct = FinGroupoid(
        arrows=squares,
        objects=g.arrows,
        source=pair.source,
        target=pair.target,
        unit=pair.unit,
        comp=pair.comp,
        inv=pair.inv,
        id=f"pair({g.id})",
    )
    return FinDoubleGroupoid(squares, side_h, g, hstruct, vstruct, id=f"dinertia({g.id})")


def crossed(c: CrossedModule) -> FinDoubleGroupoid:
    """Squares (h, g) over a point: horizontally the semidirect product H ⋊ G,
    vertically H acting on G through t, from top g to bottom t(h)g."""
    G, H, t, phi = c.G, c.H, c.t, c.phi
    side_h = trivial_groupoid(FinSet("pt", (POINT,)), id="pt")
    side_v = group_groupoid(G)
    squares = FinSet(f"D{c.id}", ((h, g) for h in H for g in G))
    hstruct = FinGroupoid(
        arrows=squares,
        objects=side_h.arrows,
        source={s: POINT for s in squares},
        target={s: POINT for s in squares},
        unit={POINT: (H.identity, G.identity)},
        comp={
            ((h, g), (k, f)): (H(h, phi[g][k]), G(g, f))
            for h, g in squares
            for k, f in squares
        },
        inv={(h, g): (phi[G.inverse(g)][H.inverse(h)], G.inverse(g)) for h, g in squares},
        id=f"{H.name}x|{G.name}",
    )
    vstruct = FinGroupoid(
        arrows=squares,
        objects=side_v.arrows,
        source={(h, g): g for h, g in squares},
        target={(h, g): G(t[h], g) for h, g in squares},
        unit={g: (H.identity, g) for g in G},
        comp={
            ((h, g), (k, f)): (H(h, k), f)
            for h, g in squares
            for k, f in squares
            if g == G(t[k], f)
        },
        inv={(h, g): (H.inverse(h), G(t[h], g)) for h, g in squares},
        id=f"{H.name}|{G.name}",
    )
    return FinDoubleGroupoid(squares, side_h, side_v, hstruct, vstruct, id=f"crossed{c.id}")


def product_double(pair: Tuple[GroupTable, GroupTable]) -> FinDoubleGroupoid:
    """Squares (h, v) with both sides h and both edges v."""
    Hg, Vg = pair
    side_h, side_v = group_groupoid(Hg), group_groupoid(Vg)
    squares = FinSet(f"{Hg.name}x{Vg.name}", ((h, v) for h in Hg for v in Vg))
    hstruct = FinGroupoid(
        arrows=squares,
        objects=side_h.arrows,
        source={(h, v): h for h, v in squares},
        target={(h, v): h for h, v in squares},
        unit={h: (h, Vg.identity) for h in Hg},
        comp={((h, v), (h, w)): (h, Vg(v, w)) for h, v in squares for w in Vg},
        inv={(h, v): (h, Vg.inverse(v)) for h, v in squares},
        id=f"{Hg.name}x{Vg.name}|h",
    )
    vstruct = FinGroupoid(
        arrows=squares,
        objects=side_v.arrows,
        source={(h, v): v for h, v in squares},
        target={(h, v): v for h, v in squares},
        unit={v: (Hg.identity, v) for v in Vg},
        comp={((h, v), (k, v)): (Hg(h, k), v) for h, v in squares for k in Hg},
        inv={(h, v): (Hg.inverse(h), v) for h, v in squares},
        id=f"{Hg.name}x{Vg.name}|v",
    )
    return FinDoubleGroupoid(squares, side_h, side_v, hstruct, vstruct, id=f"prod({Hg.name},{Vg.name})")


EXAMPLE_BUILDERS: Dict[DoubleKind, Callable[[Any], FinDoubleGroupoid]] = {
    DoubleKind.DMAIN: dmain,
    DoubleKind.DINERTIA: dinertia,
    DoubleKind.CROSSED: crossed,
    DoubleKind.PRODUCT: product_double,
}


def build_examples(kind: Any, data: Any) -> FinDoubleGroupoid:
    """
    Build one of the standard doubles and validate it.

    Args:
        kind: dmain | dinertia (data: FinGroupoid), crossed (data:
            CrossedModule), product (data: a pair of GroupTables)

    Raises:
        ValueError: If the kind is not supported
        ValidationFailed: If the input or the result is invalid
    """
    try:
        kind = DoubleKind(kind)
    except ValueError:
        supported = ", ".join(k.value for k in DoubleKind)
        raise ValueError(f"Unsupported double kind: {kind}. Supported: {supported}") from None
    if kind is DoubleKind.CROSSED:
        report = check_crossed(data)
        if not report.passed:
            raise ValidationFailed(f"{data.id} is not a crossed module", report)
    d = require_double(EXAMPLE_BUILDERS[kind](data))
    logger.debug("built %s with %d squares", d.id, len(d.squares))
    return d
