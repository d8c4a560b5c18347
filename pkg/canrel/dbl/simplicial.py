"""
CANREL Hopfoid Nerve
The simplicial object in Rel built from a hopfoid, up to level 2.
"""

import logging
from typing import List, Tuple

from canrel.core.errors import SharpnessError, StructureError
from canrel.core.report import Report
from canrel.dbl.hopfoid import Hopfoid
from canrel.relcat.checks import check_simplicial
from canrel.relcat.relations import Rel, chain, chain_sharp, cross, identity, transpose
from canrel.relcat.sets import product
from canrel.relcat.structures import SimplicialRel

logger = logging.getLogger(__name__)

MAX_DEPTH = 2


def upper_unit_split(h: Hopfoid) -> Rel:
    """S -> S x S: the one splitting of s whose upper factor is a vertical unit."""
    S = h.carrier
    units = Rel(S, S, ((u, u) for u, _ in h.carrier_counit.pairs), name="1V")
    return chain(h.coproduct, cross(identity(S), units))


def splittings(h: Hopfoid) -> List[Tuple[str, Rel]]:
    """The splittings the level-1 degeneracies may run through, in the order tried."""
    return [("coproduct", h.coproduct), ("upper-unit", upper_unit_split(h))]


def _level_one_degeneracies(h: Hopfoid, split: Rel) -> List[Rel]:
    idS = identity(h.carrier)
    L, R, E, I = h.target, h.source, h.unit, h.antipode
    return [
        chain(split, cross(L, idS), cross(E, idS)),
        chain(split, cross(idS, R), cross(idS, chain(E, I))),
    ]


def _build(h: Hopfoid, depth: int, split: Rel) -> SimplicialRel:
    S, C = h.carrier, h.base
    idS = identity(S)
    L, R, E, D = h.target, h.source, h.unit, h.coproduct
    levels = [C, S, product(S, S)][: depth + 1]
    faces = [[], [R, L]]
    degeneracies = [[E], []]
    if depth == 2:
        keep_first = chain(cross(idS, L), cross(idS, transpose(R)), transpose(D))
        keep_second = chain(cross(R, idS), cross(transpose(L), idS), transpose(D))
        faces.append([keep_second, h.product, keep_first])
        degeneracies[1] = _level_one_degeneracies(h, split)
        degeneracies.append([])
    faces = faces[: depth + 1]
    degeneracies = degeneracies[: depth + 1]
    if depth < 2:
        degeneracies[-1] = []
    return SimplicialRel(levels=levels, faces=faces, degeneracies=degeneracies)


def hopfoid_simplicial(h: Hopfoid, depth: int = MAX_DEPTH) -> SimplicialRel:
    """
    Levels C, S, S x S with faces R, L at level 1 and
    (first-projection composite, M, second-projection composite) at level 2.

    Degeneracies are E at level 0 and, at level 1, the two unit-absorption
    composites Δ;(L x id);(E x id) and Δ;(id x R);(id x E;I). The full
    coproduct is tried first and then the splitting with a vertical unit on
    top; the first object passing every simplicial identity family is
    returned.

    Raises:
        StructureError: If depth is negative or above 2
        SharpnessError: If E;L or E;R has a pair with several middle witnesses,
            or if no splitting gives an object satisfying every identity
    """
    if depth < 0 or depth > MAX_DEPTH:
        raise StructureError(f"hopfoid nerve is built up to depth {MAX_DEPTH}, not {depth}")
    for name, rel in (("target", h.target), ("source", h.source)):
        _, crowded = chain_sharp(h.unit, rel)
        if crowded:
            raise SharpnessError(f"{h.id}: unit followed by {name} is not sharp", crowded[0][1])

    # below level 2 no degeneracy runs through a splitting
    candidates = splittings(h) if depth == 2 else splittings(h)[:1]
    failed: List[Tuple[str, Report]] = []
    for label, split in candidates:
        x = _build(h, depth, split)
        report = check_simplicial(x, depth, subject=f"nerve:{h.id}")
        if report.passed:
            logger.debug(
                "hopfoid_simplicial(%s): depth %d through the %s splitting, %d identities",
                h.id, depth, label, len(report.checks),
            )
            return x
        failed.append((label, report))
        logger.debug("hopfoid_simplicial(%s): %s splitting fails %s", h.id, label, report.failures[0].name)

    label, report = failed[-1]
    first = report.failures[0]
    raise SharpnessError(
        f"{h.id}: {first.name} does not hold at depth {depth} ({', '.join(l for l, _ in failed)} tried)",
        {"identity": first.name, "witness": first.witness, "splitting": label},
    )
