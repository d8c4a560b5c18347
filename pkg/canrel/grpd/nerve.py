"""
CANREL Nerve
The simplicial nerve of a groupoid and its inversion.

Level 0 holds the objects; level n holds composable strings (g1, ..., gn)
with r(g_i) = ℓ(g_{i+1}).
"""

import logging
from typing import List

from canrel.grpd.groupoid import FinGroupoid, require_valid
from canrel.relcat.relations import Rel, graph, identity
from canrel.relcat.sets import FinSet
from canrel.relcat.structures import SimplicialRel

logger = logging.getLogger(__name__)


def _levels(g: FinGroupoid, depth: int) -> List[FinSet]:
    levels = [g.objects]
    strings = [(a,) for a in g.arrows]
    for n in range(1, depth + 1):
        levels.append(FinSet(f"N{n}({g.id})", strings))
        strings = [s + (b,) for s in strings for b in g.arrows if g.source[s[-1]] == g.target[b]]
    return levels


def _face(g: FinGroupoid, n: int, i: int, s: tuple):
    if n == 1:
        return g.source[s[0]] if i == 0 else g.target[s[0]]
    if i == 0:
        return s[1:]
    if i == n:
        return s[:-1]
    return s[: i - 1] + (g.comp[(s[i - 1], s[i])],) + s[i + 1 :]


def _degeneracy(g: FinGroupoid, n: int, i: int, s):
    if n == 0:
        return (g.unit[s],)
    if i == 0:
        return (g.unit[g.target[s[0]]],) + s
    return s[:i] + (g.unit[g.source[s[i - 1]]],) + s[i:]


def nerve(g: FinGroupoid, depth: int) -> SimplicialRel:
    require_valid(g)
    levels = _levels(g, depth)
    faces: List[List[Rel]] = [[]]
    degeneracies: List[List[Rel]] = []
    for n in range(1, depth + 1):
        faces.append(
            [
                graph(levels[n], levels[n - 1], {s: _face(g, n, i, s) for s in levels[n]}, name=f"d{i}")
                for i in range(n + 1)
            ]
        )
    for n in range(depth + 1):
        if n == depth:
            degeneracies.append([])
            continue
        degeneracies.append(
            [
                graph(levels[n], levels[n + 1], {s: _degeneracy(g, n, i, s) for s in levels[n]}, name=f"s{i}")
                for i in range(n + 1)
            ]
        )
    logger.debug("nerve(%s): level sizes %s", g.id, [len(level) for level in levels])
    return SimplicialRel(levels, faces, degeneracies)


def nerve_inversions(g: FinGroupoid, x: SimplicialRel) -> List[Rel]:
    """(g1, ..., gn) -> (gn⁻¹, ..., g1⁻¹); identity on objects."""
    result = [identity(x.levels[0])]
    for level in x.levels[1:]:
        result.append(graph(level, level, {s: tuple(g.inv[a] for a in reversed(s)) for s in level}, name="I"))
    return result
