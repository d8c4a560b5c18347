"""
CANREL Groupoid Isomorphism
Pruned backtracking search for isomorphisms and finite Morita invariants.

The search handles several groupoid structures on one arrow set at once,
which is what isomorphisms of double groupoids need.
"""

import logging
from collections import Counter
from typing import Dict, List, Optional, Sequence, Tuple

from canrel.grpd.groupoid import FinGroupoid, isotropy, orbits
from canrel.grpd.groups import isomorphic
from canrel.relcat.sets import Atom

logger = logging.getLogger(__name__)

Maps = Tuple[Dict[Atom, Atom], Dict[Atom, Atom]]


def _loop_order(g: FinGroupoid, a: Atom) -> int:
    if g.source[a] != g.target[a]:
        return 0
    k, x, e = 1, a, g.unit[g.source[a]]
    while x != e:
        x = g.comp[(x, a)]
        k += 1
    return k


def _signature(g: FinGroupoid, a: Atom) -> tuple:
    x, y = g.target[a], g.source[a]
    return (
        g.is_unit(a),
        _loop_order(g, a),
        len(g.hom(x, y)),
        len(g.loops(x)),
        len(g.loops(y)),
    )


def is_isomorphism(
    g1: FinGroupoid,
    g2: FinGroupoid,
    arrow_map: Dict[Atom, Atom],
    object_map: Optional[Dict[Atom, Atom]] = None,
) -> bool:
    """Whether the maps are bijections preserving all five structure maps."""
    if len(g1.arrows) != len(g2.arrows) or len(g1.objects) != len(g2.objects):
        return False
    if set(arrow_map) != set(g1.arrows) or set(arrow_map.values()) != set(g2.arrows):
        return False
    if object_map is None:
        object_map = {x: g2.source[arrow_map[g1.unit[x]]] for x in g1.objects}
    if set(object_map) != set(g1.objects) or set(object_map.values()) != set(g2.objects):
        return False
    f, o = arrow_map, object_map
    return (
        all(o[g1.source[a]] == g2.source[f[a]] and o[g1.target[a]] == g2.target[f[a]] for a in g1.arrows)
        and all(f[g1.unit[x]] == g2.unit[o[x]] for x in g1.objects)
        and all(f[g1.inv[a]] == g2.inv[f[a]] for a in g1.arrows)
        and len(g1.comp) == len(g2.comp)
        and all(g2.comp.get((f[a], f[b])) == f[ab] for (a, b), ab in g1.comp.items())
    )


def find_joint_isomorphism(
    structures: Sequence[Tuple[FinGroupoid, FinGroupoid]],
    hint: Optional[Dict[Atom, Atom]] = None,
) -> Optional[Tuple[List[Dict[Atom, Atom]], Dict[Atom, Atom]]]:
    """
    One arrow bijection that is an isomorphism for every pair of structures.

    All first components share one arrow set, as do all second components.

    Returns:
        (object maps, one per structure; arrow map) or None
    """
    first, second = structures[0]
    if hint is not None and all(is_isomorphism(g1, g2, hint) for g1, g2 in structures):
        return [
            {x: g2.source[hint[g1.unit[x]]] for x in g1.objects} for g1, g2 in structures
        ], dict(hint)
    if len(first.arrows) != len(second.arrows):
        return None
    if any(len(g1.objects) != len(g2.objects) for g1, g2 in structures):
        return None

    sig1 = {a: tuple(_signature(g1, a) for g1, _ in structures) for a in first.arrows}
    sig2 = {b: tuple(_signature(g2, b) for _, g2 in structures) for b in second.arrows}
    if Counter(sig1.values()) != Counter(sig2.values()):
        return None

    # units first, then arrows grouped by endpoints so objects get fixed early
    order: List[Atom] = sorted(
        first.arrows,
        key=lambda a: (
            not first.is_unit(a),
            first.objects.index(first.target[a]),
            first.objects.index(first.source[a]),
        ),
    )
    f: Dict[Atom, Atom] = {}
    used = set()
    objs: List[Dict[Atom, Atom]] = [{} for _ in structures]
    searched = 0

    def consistent(a: Atom, b: Atom) -> bool:
        for (g1, g2), obj in zip(structures, objs):
            pending: Dict[Atom, Atom] = {}
            for x, y in ((g1.target[a], g2.target[b]), (g1.source[a], g2.source[b])):
                known = obj.get(x, pending.get(x))
                if known is not None and known != y:
                    return False
                if known is None and (y in obj.values() or y in pending.values()):
                    return False
                pending[x] = y
            for c, d in list(f.items()) + [(a, b)]:
                for pq, image_key in (((a, c), (b, d)), ((c, a), (d, b))):
                    if pq not in g1.comp:
                        continue
                    image = g2.comp.get(image_key)
                    if image is None:
                        return False
                    product = g1.comp[pq]
                    if product in f and f[product] != image:
                        return False
                    if product == a and image != b:
                        return False
            inv = g1.inv[a]
            if inv in f and f[inv] != g2.inv[b]:
                return False
            if inv == a and g2.inv[b] != b:
                return False
        return True

    def extend(i: int) -> bool:
        nonlocal searched
        if i == len(order):
            return all(is_isomorphism(g1, g2, f, obj) for (g1, g2), obj in zip(structures, objs))
        a = order[i]
        for b in second.arrows:
            if b in used or sig2[b] != sig1[a] or not consistent(a, b):
                continue
            searched += 1
            added = []
            for (g1, g2), obj in zip(structures, objs):
                fresh = [x for x in (g1.target[a], g1.source[a]) if x not in obj]
                obj[g1.target[a]] = g2.target[b]
                obj[g1.source[a]] = g2.source[b]
                added.append(fresh)
            f[a] = b
            used.add(b)
            if extend(i + 1):
                return True
            del f[a]
            used.discard(b)
            for obj, fresh in zip(objs, added):
                for x in fresh:
                    obj.pop(x, None)
        return False

    found = extend(0)
    logger.debug("joint isomorphism search: %d candidates tried", searched)
    if not found:
        return None
    return [dict(obj) for obj in objs], dict(f)


def find_isomorphism(g1: FinGroupoid, g2: FinGroupoid) -> Optional[Maps]:
    """(object map, arrow map) of an isomorphism, or None."""
    found = find_joint_isomorphism([(g1, g2)])
    if found is None:
        return None
    (objects,), arrows = found
    return objects, arrows


def morita_invariants(g1: FinGroupoid, g2: FinGroupoid) -> Dict[str, bool]:
    """Orbit-count bijection and matching of isotropy groups up to isomorphism."""
    o1, o2 = orbits(g1), orbits(g2)
    groups1 = [isotropy(g1, orbit[0]) for orbit in o1]
    remaining = [isotropy(g2, orbit[0]) for orbit in o2]
    matched = len(groups1) == len(remaining)
    for group in groups1:
        if not matched:
            break
        partner = next((k for k, other in enumerate(remaining) if isomorphic(group, other)), None)
        if partner is None:
            matched = False
        else:
            remaining.pop(partner)
    return {"orbit_bijection": len(o1) == len(o2), "isotropy_iso": matched}
