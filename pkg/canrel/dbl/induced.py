"""
CANREL Induced Groupoids
The groupoid obtained by restricting the hopfoid target and source to their
common domain, its orbit partition, and the lemmas behind the construction.
"""

import logging
from typing import Dict, List, Tuple

from canrel.core.errors import StructureError, ValidationFailed
from canrel.core.report import Report
from canrel.dbl.core_groupoid import core
from canrel.dbl.double import FinDoubleGroupoid, require_double
from canrel.dbl.hopfoid import Hopfoid, core_via_hopfoid, hopf_source_map, hopf_target_map, to_hopfoid
from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.relcat.relations import Rel, chain, domain, equal, transpose
from canrel.relcat.sets import POINT, Atom, FinSet, point, product

logger = logging.getLogger(__name__)


def induced_squares(d: FinDoubleGroupoid) -> FinSet:
    H = d.side_h
    return d.squares.subset(f"Dind({d.id})", lambda s: H.is_unit(d.left(s)) and H.is_unit(d.right(s)))


def induced_groupoid(d: FinDoubleGroupoid) -> FinGroupoid:
    """
    Squares with unit sides, over the core squares with unit sides.

    Target and source are the hopfoid L and R. Composable squares s, t
    multiply as 1^V(top s) beside t, which equals s beside 1^V(top t).
    """
    require_double(d)
    V = d.side_v
    arrows = induced_squares(d)
    target_all, source_all = hopf_target_map(d), hopf_source_map(d)
    target = {s: target_all[s] for s in arrows}
    source = {s: source_all[s] for s in arrows}
    K = core(d)
    objects = K.arrows.subset(f"Y({d.id})", lambda c: d.side_h.is_unit(d.left(c)))
    members = set(arrows)
    comp = {}
    for s in arrows:
        for t in arrows:
            if source[s] == target[t]:
                st = d.hcomp(d.vunit(d.top(s)), t)
                if st not in members:
                    raise StructureError(f"{d.id}: induced product of {s!r} and {t!r} leaves the carrier")
                comp[(s, t)] = st
    inv = {}
    for s in arrows:
        w = d.vunit(V.inv[d.top(s)])
        inv[s] = d.hcomp(d.hcomp(w, s), w)
    result = FinGroupoid(
        arrows=arrows,
        objects=objects,
        source=source,
        target=target,
        unit={y: y for y in objects},
        comp=comp,
        inv=inv,
        id=f"ind({d.id})",
    )
    logger.debug("induced_groupoid(%s): %d arrows over %d objects", d.id, len(arrows), len(objects))
    return require_valid(result)


def orbit_partition(h: Hopfoid) -> Tuple[FinSet, List[Tuple[Atom, ...]]]:
    """
    Classes of the relation Rᵗ;L on the base.

    Raises:
        ValidationFailed: If Rᵗ;L and Lᵗ;R differ; the report carries the
            offending pair
    """
    forward = chain(transpose(h.source), h.target)
    backward = chain(transpose(h.target), h.source)
    report = Report(f"orbits:{h.id}")
    report.check("orbit-relation-symmetric", equal(forward, backward))
    if not report.passed:
        raise ValidationFailed(f"{h.id}: orbit relations disagree", report)

    Y = domain(forward)
    parent: Dict[Atom, Atom] = {y: y for y in Y}

    def find(x: Atom) -> Atom:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in forward.pairs:
        ra, rb = find(a), find(b)
        if ra != rb:
            if Y.index(ra) < Y.index(rb):
                parent[rb] = ra
            else:
                parent[ra] = rb
    classes: Dict[Atom, List[Atom]] = {}
    for y in Y:
        classes.setdefault(find(y), []).append(y)
    return Y, [tuple(c) for c in classes.values()]


def check_double_lemmas(d: FinDoubleGroupoid) -> Report:
    """Pointwise identities behind the induced groupoid and the core product."""
    require_double(d)
    report = Report(f"lemmas:{d.id}")
    antipode = lambda s: d.hinv(d.vinv(s))  # noqa: E731

    arrows = induced_squares(d)
    bad = next(
        (
            s
            for s in arrows
            if d.hcomp(d.hcomp(d.vunit(d.top(s)), antipode(s)), d.vunit(d.bottom(s))) != s
        ),
        None,
    )
    report.add("antipode-sandwich", bad is None, bad)

    G = induced_groupoid(d)
    bad = next(
        (
            (s, t)
            for (s, t) in G.comp
            if d.hcomp(d.vunit(d.top(s)), t) != d.hcomp(s, d.vunit(d.top(t)))
        ),
        None,
    )
    report.add("composability", bad is None, bad)
    bad = next(
        (
            (s, t)
            for (s, t), st in G.comp.items()
            if G.target[st] != G.target[s] or G.source[st] != G.source[t]
        ),
        None,
    )
    report.add("product-endpoints", bad is None, bad)

    K = core(d)
    mult, unit = core_via_hopfoid(to_hopfoid(d))
    table = Rel(product(K.arrows, K.arrows), K.arrows, (((a, b), ab) for (a, b), ab in K.comp.items()))
    report.check("core-product", equal(mult, table))
    report.check("core-unit", equal(unit, Rel(point(), K.arrows, ((POINT, e) for e in K.units))))
    return report
