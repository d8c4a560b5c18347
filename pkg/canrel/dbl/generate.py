"""
CANREL Double Generation
Every double groupoid over small side groupoids, one labelled copy per
solution; callers deduplicate up to isomorphism.

The frame of a square is the quadruple (left, right, bottom, top). The
frames of a double are closed under both compositions and fill every
source pair, so they form a thin double inside the frame space of H and V.
The squares framed by units at an object form an abelian kernel group and
every frame carries one copy of it, so once a section is fixed

    hcomp((f, a), (g, b)) = (fg, a + rho_f(b) + c_h(f, g))
    vcomp((f, a), (g, b)) = (f o g, a + tau_left(f)(b) + c_v(f, g))

with rho, tau automorphisms of the kernel and c_h, c_v normalized
2-cocycles. Generation picks a closed frame set, a kernel group and then
solves for (rho, c_h) and (tau, c_v) by backtracking; each assembled
candidate is confirmed with validate_double.
"""

import logging
from collections import defaultdict
from functools import reduce
from itertools import permutations, product as iproduct
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

from canrel.dbl.double import FinDoubleGroupoid, validate_double
from canrel.grpd.groupoid import FinGroupoid
from canrel.grpd.groups import GroupTable, automorphisms, cyclic, direct_product
from canrel.grpd.standard import disjoint_union
from canrel.relcat.sets import Atom, FinSet

logger = logging.getLogger(__name__)

Frame = Tuple[Atom, Atom, Atom, Atom]


# Side pairs


def relabel_objects(g: FinGroupoid, mapping: Dict[Atom, Atom], objects: FinSet) -> FinGroupoid:
    """The same arrows over renamed objects."""
    return FinGroupoid(
        arrows=g.arrows,
        objects=objects,
        source={a: mapping[x] for a, x in g.source.items()},
        target={a: mapping[x] for a, x in g.target.items()},
        unit={mapping[x]: u for x, u in g.unit.items()},
        comp=dict(g.comp),
        inv=dict(g.inv),
        id=g.id,
    )


def source_pairs(H: FinGroupoid, V: FinGroupoid) -> List[Tuple[Atom, Atom]]:
    """Pairs (h, v) with a common source; a double has a square over each."""
    return [(h, v) for h in H.arrows for v in V.arrows if H.source[h] == V.source[v]]


def jointly_connected(H: FinGroupoid, V: FinGroupoid) -> bool:
    root = {x: x for x in V.objects}

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    for g in (H, V):
        for a in g.arrows:
            root[find(g.source[a])] = find(g.target[a])
    return len({find(x) for x in V.objects}) == 1


def side_pairs(groupoids: Sequence[FinGroupoid], max_squares: int) -> Iterator[Tuple[FinGroupoid, FinGroupoid]]:
    """
    (H, V) over the objects of V, jointly connected, with at most
    max_squares source pairs.

    H is laid over V along every bijection of objects, so a pair may repeat
    up to isomorphism.
    """
    for H in groupoids:
        n = len(H.objects)
        # a connected base with n > 1 objects has at least two source pairs per object
        if n > 1 and 2 * n > max_squares:
            continue
        for V in groupoids:
            if len(V.objects) != n:
                continue
            for image in permutations(V.objects.elements):
                laid = relabel_objects(H, dict(zip(H.objects.elements, image)), V.objects)
                if jointly_connected(laid, V) and len(source_pairs(laid, V)) <= max_squares:
                    yield laid, V


# Frames


class FrameSpace:
    """Quadruples (left, right, bottom, top) whose corners agree, with both compositions."""

    def __init__(self, H: FinGroupoid, V: FinGroupoid):
        self.H, self.V = H, V
        between: Dict[Tuple[Atom, Atom], List[Atom]] = defaultdict(list)
        for v in V.arrows:
            between[(V.target[v], V.source[v])].append(v)
        self.frames: List[Frame] = [
            (l, r, b, t)
            for l in H.arrows
            for r in H.arrows
            for b in between[(H.target[l], H.target[r])]
            for t in between[(H.source[l], H.source[r])]
        ]
        self.position = {f: i for i, f in enumerate(self.frames)}

    def hunit(self, h: Atom) -> Frame:
        H, V = self.H, self.V
        return (h, h, V.unit[H.target[h]], V.unit[H.source[h]])

    def vunit(self, v: Atom) -> Frame:
        H, V = self.H, self.V
        return (H.unit[V.target[v]], H.unit[V.source[v]], v, v)

    def is_hunit(self, f: Frame) -> bool:
        return f == self.hunit(f[0])

    def is_vunit(self, f: Frame) -> bool:
        return f == self.vunit(f[2])

    def hcomp(self, f: Frame, g: Frame) -> Optional[Frame]:
        if f[1] != g[0]:
            return None
        return (f[0], g[1], self.V.comp[(f[2], g[2])], self.V.comp[(f[3], g[3])])

    def vcomp(self, f: Frame, g: Frame) -> Optional[Frame]:
        if f[3] != g[2]:
            return None
        return (self.H.comp[(f[0], g[0])], self.H.comp[(f[1], g[1])], f[2], g[3])

    def hinv(self, f: Frame) -> Frame:
        return (f[1], f[0], self.V.inv[f[2]], self.V.inv[f[3]])

    def vinv(self, f: Frame) -> Frame:
        return (self.H.inv[f[0]], self.H.inv[f[1]], f[3], f[2])

    def units(self) -> List[Frame]:
        return [self.hunit(h) for h in self.H.arrows] + [self.vunit(v) for v in self.V.arrows]

    def close(self, closed: Iterable[Frame], extra: Iterable[Frame], limit: int) -> Optional[FrozenSet[Frame]]:
        """Closure of closed + extra under both compositions and inverses; None past `limit`."""
        members = set(closed)
        queue = [f for f in dict.fromkeys(extra) if f not in members]
        members.update(queue)
        while queue:
            if len(members) > limit:
                return None
            f = queue.pop()
            found = [self.hinv(f), self.vinv(f)]
            for g in list(members):
                found.extend((self.hcomp(f, g), self.hcomp(g, f), self.vcomp(f, g), self.vcomp(g, f)))
            for x in found:
                if x is not None and x not in members:
                    members.add(x)
                    queue.append(x)
        return frozenset(members) if len(members) <= limit else None

    def fills(self, frames: Iterable[Frame]) -> bool:
        hit = {(f[1], f[3]) for f in frames}
        return all(pair in hit for pair in source_pairs(self.H, self.V))


def thin_frame_sets(space: FrameSpace, limit: int) -> List[FrozenSet[Frame]]:
    """Every closed frame set with at most `limit` members filling each source pair."""
    base = space.close((), space.units(), limit)
    if base is None:
        return []
    seen = {base}
    frontier = [base]
    while frontier:
        closed = frontier.pop()
        for q in space.frames:
            if q in closed:
                continue
            grown = space.close(closed, (q,), limit)
            if grown is not None and grown not in seen:
                seen.add(grown)
                frontier.append(grown)
    found = [frames for frames in seen if space.fills(frames)]
    return sorted(found, key=lambda frames: (len(frames), sorted(space.position[f] for f in frames)))


# Kernels


def _factor(n: int) -> Dict[int, int]:
    powers: Dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            powers[p] = powers.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        powers[n] = powers.get(n, 0) + 1
    return powers


def _partitions(n: int, largest: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_groups(order: int) -> List[GroupTable]:
    """One abelian group per isomorphism class, as products of cyclic groups of prime-power order."""
    per_prime = [[tuple(p**k for k in part) for part in _partitions(e)] for p, e in sorted(_factor(order).items())]
    groups = []
    for choice in iproduct(*per_prime):
        orders = [q for part in choice for q in part]
        factors = [cyclic(q) for q in orders] or [cyclic(1)]
        groups.append(reduce(direct_product, factors))
    return groups


class Kernel:
    """An abelian group on 0..n-1 with its automorphisms as image tuples."""

    def __init__(self, group: GroupTable):
        self.group = group
        index = {a: i for i, a in enumerate(group.elements)}
        self.labels = group.elements
        self.zero = index[group.identity]
        self.add = [[index[group(a, b)] for b in group.elements] for a in group.elements]
        self.autos = [tuple(index[f[a]] for a in group.elements) for f in automorphisms(group)]
        self.identity = tuple(range(len(group)))

    def __len__(self) -> int:
        return len(self.labels)

    @staticmethod
    def compose(p: Tuple[int, ...], q: Tuple[int, ...]) -> Tuple[int, ...]:
        return tuple(p[i] for i in q)

    def plus(self, *xs: int) -> int:
        return reduce(lambda x, y: self.add[x][y], xs, self.zero)


# Solving


Constraint = Tuple[Tuple[tuple, ...], Callable[[Dict[tuple, object]], bool]]


def _backtrack(variables: List[tuple], domains: Dict[tuple, Sequence], constraints: List[Constraint]) -> Iterator[Dict]:
    """Assignments meeting every constraint; each is tested once its last variable is set."""
    position = {v: i for i, v in enumerate(variables)}
    due: Dict[int, List[Callable]] = defaultdict(list)
    for needs, test in constraints:
        due[max((position[v] for v in needs), default=-1)].append(test)
    assignment: Dict[tuple, object] = {}
    if not all(test(assignment) for test in due[-1]):
        return

    def extend(i: int) -> Iterator[Dict]:
        if i == len(variables):
            yield dict(assignment)
            return
        var = variables[i]
        for value in domains[var]:
            assignment[var] = value
            if all(test(assignment) for test in due[i]):
                yield from extend(i + 1)
        assignment.pop(var, None)

    yield from extend(0)


def _side_solutions(
    frames: Sequence[Frame],
    comp: Callable[[Frame, Frame], Optional[Frame]],
    is_unit: Callable[[Frame], bool],
    twist_keys: Sequence[Atom],
    twist_laws: Sequence[Tuple[Optional[Atom], Optional[Atom], Optional[Atom]]],
    twist_of: Callable[[Frame], Optional[Atom]],
    kernel: Kernel,
) -> List[Dict]:
    """
    Twists and normalized cocycles making one composition associative.

    `twist_laws` lists (k1, k2, k12) with twist[k12] = twist[k1] o twist[k2];
    None stands for the identity automorphism.
    """
    pairs = [(f, g) for f in frames for g in frames if not is_unit(f) and not is_unit(g) and comp(f, g) is not None]
    free = set(pairs)
    variables = [("twist", k) for k in twist_keys] + [("c", f, g) for f, g in pairs]
    domains = {v: kernel.autos if v[0] == "twist" else range(len(kernel)) for v in variables}

    def twist(a, k):
        return kernel.identity if k is None else a[("twist", k)]

    def c(a, f, g):
        return a[("c", f, g)] if (f, g) in free else kernel.zero

    constraints: List[Constraint] = []
    for k1, k2, k12 in twist_laws:
        needs = tuple(("twist", k) for k in (k1, k2, k12) if k is not None)
        constraints.append(
            (needs, lambda a, k1=k1, k2=k2, k12=k12: kernel.compose(twist(a, k1), twist(a, k2)) == twist(a, k12))
        )
    for f, g in pairs:
        fg = comp(f, g)
        for k in frames:
            gk = comp(g, k)
            if is_unit(k) or gk is None:
                continue
            needs = tuple(("c",) + p for p in ((f, g), (fg, k), (g, k), (f, gk)) if p in free)
            if twist_of(f) is not None:
                needs += (("twist", twist_of(f)),)

            def cocycle(a, f=f, g=g, k=k, fg=fg, gk=gk):
                lhs = kernel.plus(c(a, f, g), c(a, fg, k))
                rhs = kernel.plus(twist(a, twist_of(f))[c(a, g, k)], c(a, f, gk))
                return lhs == rhs

            constraints.append((needs, cocycle))
    return list(_backtrack(variables, domains, constraints))


def _structure(
    squares: FinSet,
    objects: FinSet,
    frames: Sequence[Frame],
    number: Dict[Frame, int],
    kernel: Kernel,
    sides: Tuple[int, int],
    unit_frame: Callable[[Atom], Frame],
    comp: Callable[[Frame, Frame], Optional[Frame]],
    twist: Callable[[Frame], Tuple[int, ...]],
    cocycle: Callable[[Frame, Frame], int],
    id: str,
) -> Optional[FinGroupoid]:
    """One of the two compositions on squares (frame number, kernel label)."""
    labels = kernel.labels
    target_side, source_side = sides
    source = {(number[f], a): f[source_side] for f in frames for a in labels}
    target = {(number[f], a): f[target_side] for f in frames for a in labels}
    unit = {x: (number[unit_frame(x)], labels[kernel.zero]) for x in objects}
    table = {}
    for f, g in iproduct(frames, repeat=2):
        fg = comp(f, g)
        if fg is None:
            continue
        rho, correction = twist(f), cocycle(f, g)
        for i, j in iproduct(range(len(kernel)), repeat=2):
            value = kernel.plus(i, rho[j], correction)
            table[((number[f], labels[i]), (number[g], labels[j]))] = (number[fg], labels[value])
    inv = {}
    for s in squares:
        partner = next((t for t in squares if table.get((s, t)) == unit.get(target[s])), None)
        if partner is None:
            return None
        inv[s] = partner
    return FinGroupoid(squares, objects, source, target, unit, table, inv, id=id)


def extensions(space: FrameSpace, frames: FrozenSet[Frame], group: GroupTable, id: str) -> Iterator[FinDoubleGroupoid]:
    """Doubles whose frames are `frames` and whose kernel is `group`."""
    H, V = space.H, space.V
    kernel = Kernel(group)
    ordered = sorted(frames, key=space.position.__getitem__)
    number = {f: i for i, f in enumerate(ordered)}
    moving = [f for f in ordered if not space.is_hunit(f)]
    frame_laws = []
    for f, g in iproduct(moving, repeat=2):
        fg = space.hcomp(f, g)
        if fg is not None:
            frame_laws.append((f, g, None if space.is_hunit(fg) else fg))
    horizontal = _side_solutions(
        ordered,
        space.hcomp,
        space.is_hunit,
        moving,
        frame_laws,
        lambda f: None if space.is_hunit(f) else f,
        kernel,
    )
    if not horizontal:
        return
    vertical = _side_solutions(
        ordered,
        space.vcomp,
        space.is_vunit,
        [h for h in H.arrows if not H.is_unit(h)],
        [
            (h, k, None if H.is_unit(hk) else hk)
            for (h, k), hk in H.comp.items()
            if not H.is_unit(h) and not H.is_unit(k)
        ],
        lambda f: None if H.is_unit(f[0]) else f[0],
        kernel,
    )
    squares = FinSet(f"{id}.S", ((number[f], a) for f in ordered for a in kernel.labels))
    n = 0
    for hs, vs in iproduct(horizontal, vertical):
        hstruct = _structure(
            squares, H.arrows, ordered, number, kernel, (0, 1), space.hunit, space.hcomp,
            lambda f, hs=hs: kernel.identity if space.is_hunit(f) else hs[("twist", f)],
            lambda f, g, hs=hs: hs.get(("c", f, g), kernel.zero),
            f"{id}#{n}|h",
        )
        vstruct = _structure(
            squares, V.arrows, ordered, number, kernel, (2, 3), space.vunit, space.vcomp,
            lambda f, vs=vs: kernel.identity if H.is_unit(f[0]) else vs[("twist", f[0])],
            lambda f, g, vs=vs: vs.get(("c", f, g), kernel.zero),
            f"{id}#{n}|v",
        )
        if hstruct is None or vstruct is None:
            continue
        d = FinDoubleGroupoid(squares, H, V, hstruct, vstruct, id=f"{id}#{n}")
        if validate_double(d).passed:
            n += 1
            yield d


def connected_doubles(groupoids: Sequence[FinGroupoid], max_squares: int) -> Iterator[FinDoubleGroupoid]:
    """Every double over a jointly connected base with sides from `groupoids`, up to relabelling."""
    count = batch = 0
    for H, V in side_pairs(groupoids, max_squares):
        space = FrameSpace(H, V)
        for frames in thin_frame_sets(space, max_squares):
            for order in range(1, max_squares // len(frames) + 1):
                for group in abelian_groups(order):
                    batch += 1
                    for d in extensions(space, frames, group, f"gen{batch}[{H.id}|{V.id}|{group.name}]"):
                        count += 1
                        yield d
    logger.debug("generated %d connected doubles with at most %d squares", count, max_squares)


# Disjoint unions


def disjoint_double(*doubles: FinDoubleGroupoid, id: Optional[str] = None) -> FinDoubleGroupoid:
    """Component i contributes squares, sides and objects tagged (i, x)."""
    squares = FinSet("+".join(d.squares.id for d in doubles), ((i, s) for i, d in enumerate(doubles) for s in d.squares))
    return FinDoubleGroupoid(
        squares=squares,
        side_h=disjoint_union(*(d.side_h for d in doubles)),
        side_v=disjoint_union(*(d.side_v for d in doubles)),
        hstruct=disjoint_union(*(d.hstruct for d in doubles)),
        vstruct=disjoint_union(*(d.vstruct for d in doubles)),
        id=id or "+".join(d.id for d in doubles),
    )


def unions(
    components: Sequence[FinDoubleGroupoid],
    max_squares: int,
    max_arrows: int,
) -> Iterator[FinDoubleGroupoid]:
    """Disjoint unions of two or more components within the bounds, one per multiset."""

    def grow(start: int, chosen: List[int], squares: int, h: int, v: int) -> Iterator[FinDoubleGroupoid]:
        if len(chosen) > 1:
            yield disjoint_double(*(components[i] for i in chosen))
        for i in range(start, len(components)):
            d = components[i]
            s2, h2, v2 = squares + len(d.squares), h + len(d.side_h.arrows), v + len(d.side_v.arrows)
            if s2 <= max_squares and h2 <= max_arrows and v2 <= max_arrows:
                yield from grow(i, chosen + [i], s2, h2, v2)

    yield from grow(0, [], 0, 0, 0)
