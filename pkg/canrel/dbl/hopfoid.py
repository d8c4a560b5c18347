"""
CANREL Hopfoids
Target, source, unit, product, coproduct and antipode relations of a double
groupoid, and the checker for the eight hopfoid conditions.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Tuple

from canrel.core.report import Report
from canrel.dbl.core_groupoid import core
from canrel.dbl.double import FinDoubleGroupoid, require_double
from canrel.grpd.bridge import to_star_comonoid
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.relcat.checks import check_comonoid, check_monoid, check_star
from canrel.relcat.relations import (
    Rel,
    chain,
    chain_sharp,
    counit,
    cross,
    diagonal,
    equal,
    graph,
    identity,
    middle_swap,
    swap,
    transpose,
    unit_left,
)
from canrel.relcat.sets import POINT, FinSet, point, product
from canrel.relcat.structures import RelComonoid, RelMonoid, StarStructure

logger = logging.getLogger(__name__)


@dataclass
class Hopfoid:
    """Relations on a carrier S over a base C.

    target, source: S -> C; unit: C -> S; product: S x S -> S;
    coproduct: S -> S x S; antipode: S -> S. The carrier and the base each
    carry a star comonoid.
    """

    carrier: FinSet
    base: FinSet
    target: Rel
    source: Rel
    unit: Rel
    product: Rel
    coproduct: Rel
    antipode: Rel
    carrier_counit: Rel
    carrier_star: Rel
    base_coproduct: Rel
    base_counit: Rel
    base_star: Rel
    id: str = field(default="hopfoid", compare=False)

    def carrier_comonoid(self) -> RelComonoid:
        return RelComonoid(self.carrier, self.coproduct, self.carrier_counit)

    def base_comonoid(self) -> RelComonoid:
        return RelComonoid(self.base, self.base_coproduct, self.base_counit)

    def unit_image(self) -> Rel:
        """pt -> S: the unit applied to the base units."""
        return chain(transpose(self.base_counit), self.unit)

    def relations(self) -> Dict[str, Rel]:
        return {
            "target": self.target,
            "source": self.source,
            "unit": self.unit,
            "product": self.product,
            "coproduct": self.coproduct,
            "antipode": self.antipode,
            "carrierCounit": self.carrier_counit,
            "carrierStar": self.carrier_star,
            "baseCoproduct": self.base_coproduct,
            "baseCounit": self.base_counit,
            "baseStar": self.base_star,
        }


def hopf_target_map(d: FinDoubleGroupoid) -> Dict:
    H, V = d.side_h, d.side_v
    return {
        s: d.hcomp(s, d.vunit(V.inv[d.top(s)]))
        for s in d.squares
        if H.is_unit(d.right(s))
    }


def hopf_source_map(d: FinDoubleGroupoid) -> Dict:
    H = d.side_h
    return {
        s: d.hcomp(d.hinv(d.vinv(s)), d.vunit(d.bottom(s)))
        for s in d.squares
        if H.is_unit(d.left(s))
    }


def to_hopfoid(d: FinDoubleGroupoid) -> Hopfoid:
    require_double(d)
    H, V = d.side_h, d.side_v
    S = d.squares
    K = core(d)
    C = K.arrows
    SS = product(S, S)

    target = graph(S, C, hopf_target_map(d), name="L")
    source = graph(S, C, hopf_source_map(d), name="R")
    unit_pairs = [
        (c, d.vcomp(c, d.hunit(lam)))
        for c in C
        for lam in H.arrows
        if H.target[lam] == V.source[d.top(c)]
    ]
    unit = Rel(C, S, unit_pairs, name="E")
    mult = Rel(SS, S, (((s, t), st) for (s, t), st in d.hstruct.comp.items()), name="M")
    comult = Rel(S, SS, ((st, (s, t)) for (s, t), st in d.vstruct.comp.items()), name="Delta")
    antipode = graph(S, S, {s: d.hinv(d.vinv(s)) for s in S}, name="I")
    carrier_counit = Rel(S, point(), ((d.vunit(v), POINT) for v in V.arrows), name="epsS")
    carrier_star = graph(S, S, dict(d.vstruct.inv), name="sS")
    base_comonoid, base_star = to_star_comonoid(K)
    h = Hopfoid(
        carrier=S,
        base=C,
        target=target,
        source=source,
        unit=unit,
        product=mult,
        coproduct=comult,
        antipode=antipode,
        carrier_counit=carrier_counit,
        carrier_star=carrier_star,
        base_coproduct=base_comonoid.coproduct,
        base_counit=base_comonoid.counit,
        base_star=base_star.star,
        id=f"hopfoid({d.id})",
    )
    logger.debug("to_hopfoid(%s): carrier %d, base %d", d.id, len(S), len(C))
    return h


def _sharp_check(report: Report, name: str, *rels: Rel, expected: Rel, required: bool) -> None:
    composite, crowded = chain_sharp(*rels)
    report.check(name, equal(composite, expected))
    if not crowded:
        return
    if required:
        report.add(f"{name}:sharp", False, crowded[0])
    else:
        junction, witness = crowded[0]
        report.notes.append(f"{name}: composition {junction} is not sharp, e.g. {witness!r}")


def check_hopfoid(h: Hopfoid, strict: bool = False) -> Report:
    """
    The eight hopfoid conditions plus the comonoid and star checks.

    (i) and (ii) must compose sharply; a crowded junction there is a failing
    `:sharp` check. The absorption and antipode composites of (vii) and
    (viii) run through the coproduct, which lists every vertical splitting
    of a square, so a crowded junction there is a note unless `strict` is
    set, in which case it is a failing `:sharp` check as well.
    """
    S, C = h.carrier, h.base
    L, R, E, M, D, I = h.target, h.source, h.unit, h.product, h.coproduct, h.antipode
    idS = identity(S)
    report = Report(h.id)

    _sharp_check(report, "(i) target-unit", E, L, expected=identity(C), required=True)
    _sharp_check(report, "(i) source-unit", E, R, expected=identity(C), required=True)
    _sharp_check(report, "(ii) antipode-target", I, L, expected=R, required=True)
    _sharp_check(report, "(ii) antipode-source", I, R, expected=L, required=True)

    for name, rel in (("target", L), ("source", R)):
        composite = chain(rel, h.base_counit)
        report.check(f"(iii) {name}-counit", equal(composite, h.carrier_counit))
        if not composite.pairs and not h.carrier_counit.pairs:
            report.notes.append(f"(iii) {name}-counit holds between empty relations")

    monoid = RelMonoid(S, M, h.unit_image())
    report.extend("(iv)", check_monoid(monoid, subject="product"))

    report.check("(v) antipode-involution", equal(chain(I, I), idS))
    report.check("(v) antipode-star", equal(chain(I, h.carrier_star), chain(h.carrier_star, I)))
    report.check("(v) antipode-sigma", equal(chain(swap(S, S), cross(I, I), M), chain(M, I)))

    report.check(
        "(vi) product-coproduct",
        equal(chain(M, D), chain(cross(D, D), middle_swap(S, S, S, S), cross(M, M))),
    )

    _sharp_check(
        report, "(vii) left-absorption", D, cross(L, idS), cross(E, idS), M, expected=idS, required=strict
    )
    _sharp_check(
        report,
        "(vii) right-absorption",
        D,
        cross(idS, R),
        cross(idS, chain(E, I)),
        M,
        expected=idS,
        required=strict,
    )
    _sharp_check(report, "(viii) left-antipode", D, cross(idS, I), M, expected=chain(L, E), required=strict)
    _sharp_check(report, "(viii) right-antipode", D, cross(I, idS), M, expected=chain(R, E, I), required=strict)

    carrier = h.carrier_comonoid()
    base = h.base_comonoid()
    report.extend("carrier-comonoid", check_comonoid(carrier))
    report.extend("carrier-star", check_star(StarStructure(S, h.carrier_star), carrier))
    report.extend("base-comonoid", check_comonoid(base))
    report.extend("base-star", check_star(StarStructure(C, h.base_star), base))
    for note in report.notes:
        logger.warning("%s: %s", h.id, note)
    return report


def hopfoid_dual(h: Hopfoid) -> Hopfoid:
    """Exchange unit with target and product with coproduct by transposition."""
    unit_image = h.unit_image()
    return Hopfoid(
        carrier=h.carrier,
        base=h.base,
        target=transpose(h.unit),
        source=chain(h.antipode, transpose(h.unit)),
        unit=transpose(h.target),
        product=transpose(h.coproduct),
        coproduct=transpose(h.product),
        antipode=h.antipode,
        carrier_counit=transpose(unit_image),
        carrier_star=chain(h.carrier_star, h.antipode),
        base_coproduct=h.base_coproduct,
        base_counit=h.base_counit,
        base_star=h.base_star,
        id=f"{h.id}^*",
    )


def core_via_hopfoid(h: Hopfoid) -> Tuple[Rel, Rel]:
    """Core product and unit rebuilt from the hopfoid relations."""
    mult = chain(cross(h.unit, h.unit), h.product, h.target)
    unit = chain(h.unit_image(), h.target)
    return mult, unit


def group_shaped_hopfoid(g: FinGroupoid) -> Hopfoid:
    """A groupoid read as if its base were a point: target = source = counit."""
    require_valid(g)
    S = g.arrows
    pt = point()
    eps = Rel(S, pt, ((a, POINT) for a in S), name="eps")
    return Hopfoid(
        carrier=S,
        base=pt,
        target=eps,
        source=eps,
        unit=Rel(pt, S, ((POINT, e) for e in g.units), name="E"),
        product=Rel(product(S, S), S, (((a, b), ab) for (a, b), ab in g.comp.items()), name="M"),
        coproduct=diagonal(S),
        antipode=graph(S, S, g.inv, name="I"),
        carrier_counit=counit(S),
        carrier_star=identity(S),
        base_coproduct=transpose(unit_left(pt)),
        base_counit=identity(pt),
        base_star=identity(pt),
        id=f"group-shaped({g.id})",
    )
