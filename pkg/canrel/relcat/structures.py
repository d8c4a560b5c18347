"""
CANREL Relational Structures
Monoids, comonoids, star structures and simplicial objects in Rel.
"""

from dataclasses import dataclass, field
from typing import List

from canrel.core.errors import StructureError
from canrel.relcat.relations import Rel, transpose
from canrel.relcat.sets import FinSet, point, product


def _expect(r: Rel, src: FinSet, dst: FinSet, role: str) -> None:
    if r.src != src or r.dst != dst:
        raise StructureError(
            f"{role} must go {src.id} -> {dst.id}, got {r.src.id} -> {r.dst.id}"
        )


@dataclass
class RelMonoid:
    carrier: FinSet
    product: Rel
    unit: Rel

    def __post_init__(self):
        _expect(self.product, product(self.carrier, self.carrier), self.carrier, "product")
        _expect(self.unit, point(), self.carrier, "unit")


@dataclass
class RelComonoid:
    carrier: FinSet
    coproduct: Rel
    counit: Rel

    def __post_init__(self):
        _expect(self.coproduct, self.carrier, product(self.carrier, self.carrier), "coproduct")
        _expect(self.counit, self.carrier, point(), "counit")

    def transposed(self) -> RelMonoid:
        return RelMonoid(self.carrier, transpose(self.coproduct), transpose(self.counit))


def monoid_transpose(m: RelMonoid) -> RelComonoid:
    return RelComonoid(m.carrier, transpose(m.product), transpose(m.unit))


@dataclass
class StarStructure:
    carrier: FinSet
    star: Rel

    def __post_init__(self):
        _expect(self.star, self.carrier, self.carrier, "star")


@dataclass
class SimplicialRel:
    """Levels P_0, P_1, ...; faces[n][i]: P_n -> P_{n-1}; degeneracies[n][i]: P_n -> P_{n+1}.

    faces[0] is empty. The top level carries no degeneracies.
    """

    levels: List[FinSet]
    faces: List[List[Rel]] = field(default_factory=list)
    degeneracies: List[List[Rel]] = field(default_factory=list)

    def __post_init__(self):
        top = len(self.levels) - 1
        for n, ds in enumerate(self.faces):
            if n == 0:
                if ds:
                    raise StructureError("level 0 has no faces")
                continue
            if len(ds) != n + 1:
                raise StructureError(f"level {n} needs {n + 1} faces, got {len(ds)}")
            for i, d in enumerate(ds):
                _expect(d, self.levels[n], self.levels[n - 1], f"face d{i} at level {n}")
        for n, ss in enumerate(self.degeneracies):
            if n >= top:
                if ss:
                    raise StructureError(f"level {n} is the top level and has no degeneracies")
                continue
            if len(ss) != n + 1:
                raise StructureError(f"level {n} needs {n + 1} degeneracies, got {len(ss)}")
            for i, s in enumerate(ss):
                _expect(s, self.levels[n], self.levels[n + 1], f"degeneracy s{i} at level {n}")

    @property
    def depth(self) -> int:
        return len(self.levels) - 1
