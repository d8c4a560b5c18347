"""
CANREL Relational Checkers
Brute-force evaluation of (co)monoid, star, Hopf, action and simplicial diagrams.

Every checker returns a Report; a failed diagram carries a pair from the
symmetric difference of its two sides as witness.
"""

import logging
from typing import Dict, Iterable, List, Optional, Union

from canrel.core.errors import StructureError
from canrel.core.report import Report
from canrel.relcat.relations import (
    Rel,
    assoc,
    chain,
    classify,
    counit,
    cross,
    diagonal,
    equal,
    identity,
    middle_swap,
    swap,
    transpose,
    unit_left,
    unit_right,
)
from canrel.relcat.sets import point, product
from canrel.relcat.structures import RelComonoid, RelMonoid, SimplicialRel, StarStructure

logger = logging.getLogger(__name__)

FACE = "face"
DEGENERACY = "degeneracy"
MIXED = "face-degeneracy"
SECTION = "face-degeneracy-identity"
SIMPLICIAL_FAMILIES = (FACE, DEGENERACY, MIXED, SECTION)


def check_monoid(m: RelMonoid, subject: str = "monoid") -> Report:
    s = m.carrier
    mult, ids = m.product, identity(s)
    report = Report(subject)
    report.check(
        "associativity",
        equal(
            chain(cross(mult, ids), mult),
            chain(assoc(s, s, s), cross(ids, mult), mult),
        ),
    )
    report.check("left-unit", equal(chain(cross(m.unit, ids), mult), unit_left(s)))
    report.check("right-unit", equal(chain(cross(ids, m.unit), mult), unit_right(s)))
    return report


def check_comonoid(c: RelComonoid, subject: str = "comonoid") -> Report:
    s = c.carrier
    delta, ids = c.coproduct, identity(s)
    report = Report(subject)
    report.check(
        "coassociativity",
        equal(
            chain(delta, cross(delta, ids), assoc(s, s, s)),
            chain(delta, cross(ids, delta)),
        ),
    )
    report.check("left-counit", equal(chain(delta, cross(c.counit, ids)), transpose(unit_left(s))))
    report.check("right-counit", equal(chain(delta, cross(ids, c.counit)), transpose(unit_right(s))))
    return report


def check_star(s: StarStructure, m: Union[RelMonoid, RelComonoid], subject: str = "star") -> Report:
    """Involution, compatibility with the swap and strong positivity.

    A comonoid is checked through its transpose, which is a monoid.
    """
    if isinstance(m, RelComonoid):
        m = m.transposed()
    if s.carrier != m.carrier:
        raise StructureError(f"star carrier {s.carrier.id!r} differs from {m.carrier.id!r}")
    carrier, star = m.carrier, s.star
    report = Report(subject)
    report.check("involution", equal(chain(star, star), identity(carrier)))
    report.check(
        "sigma-compatibility",
        equal(chain(swap(carrier, carrier), cross(star, star), m.product), chain(m.product, star)),
    )
    diag_from_point = chain(transpose(counit(carrier)), diagonal(carrier))
    report.check(
        "strong-positivity",
        equal(chain(diag_from_point, cross(identity(carrier), star), m.product), m.unit),
    )
    return report


def star_flags(report: Report) -> Dict[str, bool]:
    """Collapse a `check_star` report to its two flags."""
    by_name = {c.name.rsplit(".", 1)[-1]: c.passed for c in report.checks}
    return {
        "star_ok": by_name.get("involution", False) and by_name.get("sigma-compatibility", False),
        "strongly_positive": by_name.get("strong-positivity", False),
    }


def check_hopf(m: RelMonoid, c: RelComonoid, antipode: Rel, subject: str = "hopf") -> Report:
    if m.carrier != c.carrier:
        raise StructureError(f"monoid carrier {m.carrier.id!r} differs from {c.carrier.id!r}")
    s = m.carrier
    pt = point()
    mult, delta, ids = m.product, c.coproduct, identity(s)
    report = Report(subject)
    report.check(
        "product-coproduct",
        equal(
            chain(mult, delta),
            chain(cross(delta, delta), middle_swap(s, s, s, s), cross(mult, mult)),
        ),
    )
    report.check(
        "product-counit",
        equal(chain(mult, c.counit), chain(cross(c.counit, c.counit), unit_left(pt))),
    )
    report.check(
        "unit-coproduct",
        equal(chain(m.unit, delta), chain(transpose(unit_left(pt)), cross(m.unit, m.unit))),
    )
    report.check("unit-counit", equal(chain(m.unit, c.counit), identity(pt)))
    unit_through_counit = chain(c.counit, m.unit)
    report.check(
        "antipode-left",
        equal(chain(delta, cross(antipode, ids), mult), unit_through_counit),
    )
    report.check(
        "antipode-right",
        equal(chain(delta, cross(ids, antipode), mult), unit_through_counit),
    )
    return report


def check_action(m: RelMonoid, tau: Rel, subject: str = "action") -> Report:
    """tau: S x Q -> Q against the monoid on S."""
    s, q = m.carrier, tau.dst
    if tau.src != product(s, q):
        raise StructureError(f"action must go {s.id}x{q.id} -> {q.id}, got {tau.src.id}")
    report = Report(subject)
    report.check(
        "compatibility",
        equal(
            chain(cross(identity(s), tau), tau),
            chain(transpose(assoc(s, s, q)), cross(m.product, identity(q)), tau),
        ),
    )
    report.check("unit", equal(chain(cross(m.unit, identity(q)), tau), unit_left(q)))
    return report


def check_comonoid_morphism(f: Rel, c1: RelComonoid, c2: RelComonoid, subject: str = "comonoid-morphism") -> Report:
    report = Report(subject)
    report.check("coproduct", equal(chain(c1.coproduct, cross(f, f)), chain(f, c2.coproduct)))
    report.check("counit", equal(chain(f, c2.counit), c1.counit))
    return report


def diagonal_comonoid(a) -> RelComonoid:
    return RelComonoid(a, diagonal(a), counit(a))


def _require_depth(x: SimplicialRel, depth: int) -> None:
    if depth < 0 or depth > x.depth:
        raise StructureError(f"depth {depth} needs level {depth}; only {x.depth} available")


def check_simplicial(
    x: SimplicialRel,
    depth: int,
    families: Optional[Iterable[str]] = None,
    subject: str = "simplicial",
) -> Report:
    """Simplicial identities among the maps living in levels 0..depth."""
    _require_depth(x, depth)
    wanted = set(families or SIMPLICIAL_FAMILIES)
    d, s = x.faces, x.degeneracies
    report = Report(subject)

    if FACE in wanted:
        for n in range(2, depth + 1):
            for j in range(n + 1):
                for i in range(j):
                    report.check(
                        f"{FACE}[n={n},i={i},j={j}]",
                        equal(chain(d[n][j], d[n - 1][i]), chain(d[n][i], d[n - 1][j - 1])),
                    )

    if DEGENERACY in wanted:
        for n in range(0, depth - 1):
            for j in range(n + 1):
                for i in range(j + 1):
                    report.check(
                        f"{DEGENERACY}[n={n},i={i},j={j}]",
                        equal(chain(s[n][j], s[n + 1][i]), chain(s[n][i], s[n + 1][j + 1])),
                    )

    for n in range(0, depth):
        for j in range(n + 1):
            for i in range(n + 2):
                lhs = chain(s[n][j], d[n + 1][i])
                if i in (j, j + 1):
                    if SECTION in wanted:
                        report.check(f"{SECTION}[n={n},i={i},j={j}]", equal(lhs, identity(x.levels[n])))
                elif MIXED in wanted:
                    if i < j:
                        rhs = chain(d[n][i], s[n - 1][j - 1])
                    else:
                        rhs = chain(d[n][i - 1], s[n - 1][j])
                    report.check(f"{MIXED}[n={n},i={i},j={j}]", equal(lhs, rhs))
    return report


def check_star_simplicial(x: SimplicialRel, inversions: List[Rel], subject: str = "simplicial-star") -> Report:
    """Level-wise involutions reversing the order of faces and degeneracies."""
    if len(inversions) < len(x.levels):
        raise StructureError(f"need one inversion per level, got {len(inversions)}")
    for n, inv in enumerate(inversions[: len(x.levels)]):
        flags = classify(inv)
        if inv.src != x.levels[n] or inv.dst != x.levels[n]:
            raise StructureError(f"inversion at level {n} has the wrong endpoints")
        if not all(flags[k] for k in ("surjective", "injective", "cosurjective", "coinjective")):
            raise StructureError(f"inversion at level {n} is not a bijection")
    report = Report(subject)
    for n, inv in enumerate(inversions[: len(x.levels)]):
        report.check(f"involution[n={n}]", equal(chain(inv, inv), identity(x.levels[n])))
    for n in range(1, len(x.faces)):
        for i, face in enumerate(x.faces[n]):
            report.check(
                f"faces[n={n},i={i}]",
                equal(chain(face, inversions[n - 1]), chain(inversions[n], x.faces[n][n - i])),
            )
    for n, degs in enumerate(x.degeneracies):
        for i, deg in enumerate(degs):
            report.check(
                f"degeneracies[n={n},i={i}]",
                equal(chain(deg, inversions[n + 1]), chain(inversions[n], degs[n - i])),
            )
    return report
