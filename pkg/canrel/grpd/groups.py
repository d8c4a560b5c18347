"""
CANREL Group Tables
Finite groups given by multiplication tables, with the small families used
as fixtures and enumeration seeds.
"""

from dataclasses import dataclass, field
from itertools import permutations, product as iproduct
from typing import Dict, Iterator, List, Optional, Tuple

from canrel.core.errors import StructureError
from canrel.relcat.sets import Atom


@dataclass
class GroupTable:
    """A finite group: elements in canonical order and a full product table."""

    elements: Tuple[Atom, ...]
    mul: Dict[Tuple[Atom, Atom], Atom]
    name: str = field(default="G", compare=False)

    def __post_init__(self):
        self.elements = tuple(self.elements)
        members = set(self.elements)
        for a in self.elements:
            for b in self.elements:
                c = self.mul.get((a, b))
                if c is None:
                    raise StructureError(f"group {self.name}: product {a!r}*{b!r} missing")
                if c not in members:
                    raise StructureError(f"group {self.name}: product {a!r}*{b!r}={c!r} is not an element")
        units = [e for e in self.elements if all(self.mul[(e, x)] == x == self.mul[(x, e)] for x in self.elements)]
        if len(units) != 1:
            raise StructureError(f"group {self.name}: no two-sided identity")
        self.identity = units[0]
        self._inverse = {}
        for a in self.elements:
            inv = [b for b in self.elements if self.mul[(a, b)] == self.identity == self.mul[(b, a)]]
            if not inv:
                raise StructureError(f"group {self.name}: {a!r} has no inverse")
            self._inverse[a] = inv[0]
        for a, b, c in iproduct(self.elements, repeat=3):
            if self.mul[(self.mul[(a, b)], c)] != self.mul[(a, self.mul[(b, c)])]:
                raise StructureError(f"group {self.name}: ({a!r},{b!r},{c!r}) is not associative")

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.elements)

    def __call__(self, a: Atom, b: Atom) -> Atom:
        return self.mul[(a, b)]

    def inverse(self, a: Atom) -> Atom:
        return self._inverse[a]

    def order(self, a: Atom) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul[(x, a)]
            k += 1
        return k

    def is_abelian(self) -> bool:
        return all(self.mul[(a, b)] == self.mul[(b, a)] for a in self for b in self)

    def subgroup(self, keep, name: Optional[str] = None) -> "GroupTable":
        elems = tuple(x for x in self.elements if keep(x))
        mul = {(a, b): self.mul[(a, b)] for a in elems for b in elems}
        return GroupTable(elems, mul, name or f"{self.name}'")


def from_function(elements, op, name: str) -> GroupTable:
    elements = tuple(elements)
    return GroupTable(elements, {(a, b): op(a, b) for a in elements for b in elements}, name)


def cyclic(n: int) -> GroupTable:
    elems = tuple(str(k) for k in range(n))
    return from_function(elems, lambda a, b: str((int(a) + int(b)) % n), f"Z{n}")


def symmetric(n: int) -> GroupTable:
    """Permutations in one-line notation; (s*t)(x) = s(t(x))."""
    digits = "".join(str(k) for k in range(1, n + 1))
    elems = tuple("".join(p) for p in permutations(digits))

    def op(s: str, t: str) -> str:
        return "".join(s[int(t[i]) - 1] for i in range(n))

    return from_function(elems, op, f"S{n}")


def dihedral(n: int) -> GroupTable:
    """Symmetries of the n-gon: rk rotations and sk reflections."""
    elems = tuple(f"r{k}" for k in range(n)) + tuple(f"s{k}" for k in range(n))

    def op(a: str, b: str) -> str:
        i, j = int(a[1:]), int(b[1:])
        if a[0] == "r" and b[0] == "r":
            return f"r{(i + j) % n}"
        if a[0] == "r":
            return f"s{(i + j) % n}"
        if b[0] == "r":
            return f"s{(i - j) % n}"
        return f"r{(i - j) % n}"

    return from_function(elems, op, f"D{n}")


def quaternion() -> GroupTable:
    units = {"1": (1, "1"), "i": (1, "i"), "j": (1, "j"), "k": (1, "k")}
    basic = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }

    def parse(x: str):
        return (-1, x[1:]) if x.startswith("-") else units[x]

    def op(a: str, b: str) -> str:
        sa, ua = parse(a)
        sb, ub = parse(b)
        s, u = basic[(ua, ub)]
        return u if sa * sb * s == 1 else f"-{u}"

    elems = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")
    return from_function(elems, op, "Q8")


def direct_product(g: GroupTable, h: GroupTable) -> GroupTable:
    elems = tuple(f"{a}.{b}" for a in g for b in h)
    split = {f"{a}.{b}": (a, b) for a in g for b in h}

    def op(x: str, y: str) -> str:
        (a, b), (c, d) = split[x], split[y]
        return f"{g(a, c)}.{h(b, d)}"

    return from_function(elems, op, f"{g.name}x{h.name}")


def small_groups(max_order: int) -> List[GroupTable]:
    """One group per isomorphism class for orders up to 8."""
    if max_order > 8:
        raise StructureError("small_groups covers orders up to 8")
    catalogue: Dict[int, List] = {
        1: [lambda: cyclic(1)],
        2: [lambda: cyclic(2)],
        3: [lambda: cyclic(3)],
        4: [lambda: cyclic(4), lambda: direct_product(cyclic(2), cyclic(2))],
        5: [lambda: cyclic(5)],
        6: [lambda: cyclic(6), lambda: symmetric(3)],
        7: [lambda: cyclic(7)],
        8: [
            lambda: cyclic(8),
            lambda: direct_product(cyclic(4), cyclic(2)),
            lambda: direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(2)),
            lambda: dihedral(4),
            quaternion,
        ],
    }
    return [make() for order in range(1, max_order + 1) for make in catalogue[order]]


def generators(h: GroupTable) -> List[Atom]:
    """A greedy generating set."""
    gens: List[Atom] = []
    span = {h.identity}
    for x in h.elements:
        if x in span:
            continue
        gens.append(x)
        frontier = list(span)
        while frontier:
            y = frontier.pop()
            for s in gens:
                z = h(y, s)
                if z not in span:
                    span.add(z)
                    frontier.append(z)
    return gens


def _extend(h: GroupTable, g: GroupTable, gens: List[Atom], images) -> Optional[Dict[Atom, Atom]]:
    f = {h.identity: g.identity}
    frontier = [h.identity]
    while frontier:
        x = frontier.pop()
        for s, t in zip(gens, images):
            y, value = h(x, s), g(f[x], t)
            if y in f:
                if f[y] != value:
                    return None
            else:
                f[y] = value
                frontier.append(y)
    if all(f[h(a, b)] == g(f[a], f[b]) for a in h for b in h):
        return f
    return None


def homomorphisms(h: GroupTable, g: GroupTable) -> Iterator[Dict[Atom, Atom]]:
    """All homomorphisms h -> g, determined by the images of generators."""
    gens = generators(h)
    choices = [[t for t in g if h.order(s) % g.order(t) == 0] for s in gens]
    for images in iproduct(*choices):
        f = _extend(h, g, gens, images)
        if f is not None:
            yield f


def automorphisms(h: GroupTable) -> List[Dict[Atom, Atom]]:
    return [f for f in homomorphisms(h, h) if len(set(f.values())) == len(h)]


def isomorphic(g1: GroupTable, g2: GroupTable) -> Optional[Dict[Atom, Atom]]:
    if len(g1) != len(g2):
        return None
    if sorted(g1.order(a) for a in g1) != sorted(g2.order(a) for a in g2):
        return None
    for f in homomorphisms(g1, g2):
        if len(set(f.values())) == len(g2):
            return f
    return None
