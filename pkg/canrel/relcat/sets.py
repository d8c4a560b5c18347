"""
CANREL Finite Sets
Ordered finite sets of atoms and their lazy cartesian products.

Atoms are strings or nested tuples of atoms. The element order of a set is
canonical: it fixes the order in which documents list pairs and tables.
"""

from functools import cached_property
from typing import Any, Dict, Iterable, Iterator, Optional, Tuple

from canrel.core.errors import StructureError

Atom = Any


class FinSet:
    """A finite set with a canonical element order."""

    def __init__(self, id: str, elements: Iterable[Atom] = ()):
        self.id = id
        self._elements = tuple(elements)
        if len(set(self._elements)) != len(self._elements):
            seen = set()
            for x in self._elements:
                if x in seen:
                    raise StructureError(f"set {id!r}: duplicate element {x!r}")
                seen.add(x)

    @property
    def elements(self) -> Tuple[Atom, ...]:
        return self._elements

    @cached_property
    def _index(self) -> Dict[Atom, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def index(self, x: Atom) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise StructureError(f"{x!r} is not an element of {self.id!r}") from None

    def __contains__(self, x: Atom) -> bool:
        try:
            return x in self._index
        except TypeError:
            return False

    def __iter__(self) -> Iterator[Atom]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self._elements)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FinSet):
            return NotImplemented
        if self is other:
            return True
        if len(self) != len(other):
            return False
        return all(x in other for x in self)

    def __hash__(self) -> int:
        return hash(len(self))

    def __repr__(self) -> str:
        return f"FinSet({self.id!r}, size={len(self)})"

    def subset(self, id: str, keep) -> "FinSet":
        """Elements satisfying `keep`, in this set's order."""
        return FinSet(id, (x for x in self if keep(x)))

    def require(self, x: Atom, what: str = "element") -> Atom:
        if x not in self:
            raise StructureError(f"{what} {x!r} is not in {self.id!r}")
        return x


class ProductSet(FinSet):
    """A x B, never materialized unless iterated."""

    def __init__(self, left: FinSet, right: FinSet, id: Optional[str] = None):
        self.id = id or f"{left.id}x{right.id}"
        self.left = left
        self.right = right

    @cached_property
    def _elements(self) -> Tuple[Atom, ...]:  # type: ignore[override]
        return tuple((a, b) for a in self.left for b in self.right)

    def index(self, x: Atom) -> int:
        if not self.__contains__(x):
            raise StructureError(f"{x!r} is not an element of {self.id!r}")
        return self.left.index(x[0]) * len(self.right) + self.right.index(x[1])

    def __contains__(self, x: Atom) -> bool:
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and x[0] in self.left
            and x[1] in self.right
        )

    def __len__(self) -> int:
        return len(self.left) * len(self.right)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ProductSet):
            return self.left == other.left and self.right == other.right
        return super().__eq__(other)

    __hash__ = FinSet.__hash__


POINT = "*"


def point() -> FinSet:
    """The one-element set, unit of the cartesian monoidal structure."""
    return FinSet("pt", (POINT,))


def product(a: FinSet, b: FinSet) -> FinSet:
    return ProductSet(a, b)


def sort_key(*sets: FinSet):
    """Key ordering tuples by the canonical index in each set."""

    def key(item):
        if len(sets) == 1:
            return sets[0].index(item)
        return tuple(s.index(x) for s, x in zip(sets, item))

    return key
