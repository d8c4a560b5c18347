"""
CANREL Relation Algebra
Morphisms of the category of finite sets and relations.

Composition is written in diagrammatic order: `compose(r1, r2)` first
applies r1, then r2, so it is the relation usually written r2 ∘ r1.
"""

import logging
from collections import defaultdict
from functools import cached_property, reduce
from typing import Any, Callable, Dict, FrozenSet, Iterable, List, Optional, Tuple

from canrel.core.errors import StructureError
from canrel.relcat.sets import POINT, Atom, FinSet, ProductSet, point, product, sort_key

logger = logging.getLogger(__name__)

Pair = Tuple[Atom, Atom]


class Rel:
    """A relation src -> dst given by its set of pairs."""

    def __init__(
        self,
        src: FinSet,
        dst: FinSet,
        pairs: Iterable[Pair] = (),
        validate: bool = True,
        name: str = "",
    ):
        self.src = src
        self.dst = dst
        self.name = name
        self._pairs = frozenset(pairs)
        if validate:
            for a, b in self._pairs:
                if a not in src:
                    raise StructureError(f"{self.label}: {a!r} is not in source {src.id!r}")
                if b not in dst:
                    raise StructureError(f"{self.label}: {b!r} is not in target {dst.id!r}")

    @property
    def label(self) -> str:
        return self.name or f"{self.src.id}->{self.dst.id}"

    @property
    def pairs(self) -> FrozenSet[Pair]:
        return self._pairs

    @cached_property
    def _forward(self) -> Dict[Atom, FrozenSet[Atom]]:
        index = defaultdict(set)
        for a, b in self.pairs:
            index[a].add(b)
        return {a: frozenset(bs) for a, bs in index.items()}

    @cached_property
    def _backward(self) -> Dict[Atom, FrozenSet[Atom]]:
        index = defaultdict(set)
        for a, b in self.pairs:
            index[b].add(a)
        return {b: frozenset(as_) for b, as_ in index.items()}

    def image(self, x: Atom) -> FrozenSet[Atom]:
        """Elements related to `x`."""
        return self._forward.get(x, frozenset())

    def preimage(self, y: Atom) -> FrozenSet[Atom]:
        return self._backward.get(y, frozenset())

    def value(self, x: Atom) -> Atom:
        """The unique image of `x`; StructureError otherwise."""
        ys = self.image(x)
        if len(ys) != 1:
            raise StructureError(f"{self.label}: {x!r} has {len(ys)} images, expected one")
        return next(iter(ys))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair: Pair) -> bool:
        return pair[1] in self.image(pair[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Rel):
            return NotImplemented
        return self.src == other.src and self.dst == other.dst and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(self.pairs)

    def __repr__(self) -> str:
        return f"Rel({self.label}, pairs={len(self.pairs)})"

    def sorted_pairs(self) -> List[Pair]:
        return sorted(self.pairs, key=sort_key(self.src, self.dst))


class MapRel(Rel):
    """The graph of a total function, evaluated on demand."""

    def __init__(
        self,
        src: FinSet,
        dst: FinSet,
        fn: Callable[[Atom], Atom],
        inverse: Optional[Callable[[Atom], Atom]] = None,
        name: str = "",
    ):
        self.src = src
        self.dst = dst
        self.name = name
        self.fn = fn
        self.inverse = inverse

    @cached_property
    def _pairs(self) -> FrozenSet[Pair]:  # type: ignore[override]
        return frozenset((x, self.fn(x)) for x in self.src)

    def image(self, x: Atom) -> FrozenSet[Atom]:
        if x not in self.src:
            return frozenset()
        return frozenset((self.fn(x),))

    def preimage(self, y: Atom) -> FrozenSet[Atom]:
        if self.inverse is None:
            return super().preimage(y)
        if y not in self.dst:
            return frozenset()
        return frozenset((self.inverse(y),))


class CrossRel(Rel):
    """r1 x r2 between product sets, evaluated componentwise."""

    def __init__(self, r1: Rel, r2: Rel):
        self.r1 = r1
        self.r2 = r2
        self.src = product(r1.src, r2.src)
        self.dst = product(r1.dst, r2.dst)
        self.name = f"({r1.label})x({r2.label})"

    @cached_property
    def _pairs(self) -> FrozenSet[Pair]:  # type: ignore[override]
        return frozenset(
            ((a1, a2), (b1, b2)) for a1, b1 in self.r1.pairs for a2, b2 in self.r2.pairs
        )

    def image(self, x: Atom) -> FrozenSet[Atom]:
        if x not in self.src:
            return frozenset()
        return frozenset(
            (b1, b2) for b1 in self.r1.image(x[0]) for b2 in self.r2.image(x[1])
        )

    def preimage(self, y: Atom) -> FrozenSet[Atom]:
        if y not in self.dst:
            return frozenset()
        return frozenset(
            (a1, a2) for a1 in self.r1.preimage(y[0]) for a2 in self.r2.preimage(y[1])
        )


def _require_composable(r1: Rel, r2: Rel) -> None:
    if r1.dst is not r2.src and r1.dst != r2.src:
        raise StructureError(
            f"cannot compose {r1.label} with {r2.label}: "
            f"{r1.dst.id!r} does not match {r2.src.id!r}"
        )


def compose(r1: Rel, r2: Rel) -> Rel:
    """Pairs (a, c) with some b such that (a, b) in r1 and (b, c) in r2."""
    _require_composable(r1, r2)
    if isinstance(r1, MapRel) and r1.inverse is not None and not isinstance(r2, (MapRel, CrossRel)):
        pairs = {(r1.inverse(b), c) for b, c in r2.pairs}
    else:
        pairs = {(a, c) for a, b in r1.pairs for c in r2.image(b)}
    return Rel(r1.src, r2.dst, pairs, validate=False)


def compose_sharp(r1: Rel, r2: Rel) -> Tuple[Rel, bool, Any]:
    """Compose and report whether every output pair has a single middle witness.

    Returns:
        (composite, sharp, witness) where witness is the first output pair with
        several middles, together with those middles, or None.
    """
    _require_composable(r1, r2)
    middles: Dict[Pair, List[Atom]] = defaultdict(list)
    for a, b in r1.pairs:
        for c in r2.image(b):
            middles[(a, c)].append(b)
    composite = Rel(r1.src, r2.dst, middles.keys(), validate=False)
    crowded = [pair for pair, bs in middles.items() if len(bs) > 1]
    if not crowded:
        return composite, True, None
    first = min(crowded, key=sort_key(r1.src, r2.dst))
    return composite, False, (first, sorted(middles[first], key=repr))


def chain(*rels: Rel) -> Rel:
    """Left fold of `compose`."""
    if not rels:
        raise StructureError("chain needs at least one relation")
    return reduce(compose, rels)


def chain_sharp(*rels: Rel) -> Tuple[Rel, List[Any]]:
    """Fold `compose_sharp`, collecting the witness of every non-sharp junction."""
    acc = rels[0]
    crowded = []
    for i, r in enumerate(rels[1:], start=1):
        acc, sharp, witness = compose_sharp(acc, r)
        if not sharp:
            crowded.append((i, witness))
    return acc, crowded


def transpose(r: Rel) -> Rel:
    if isinstance(r, MapRel) and r.inverse is not None:
        return MapRel(r.dst, r.src, r.inverse, r.fn, name=f"{r.label}^t")
    if isinstance(r, CrossRel):
        return CrossRel(transpose(r.r1), transpose(r.r2))
    return Rel(r.dst, r.src, ((b, a) for a, b in r.pairs), validate=False, name=f"{r.label}^t")


def cross(r1: Rel, r2: Rel) -> Rel:
    return CrossRel(r1, r2)


def materialize(r: Rel) -> Rel:
    return Rel(r.src, r.dst, r.pairs, validate=False, name=r.name)


# Constructors


def identity(a: FinSet) -> Rel:
    return MapRel(a, a, lambda x: x, lambda x: x, name=f"id_{a.id}")


def full(a: FinSet, b: FinSet) -> Rel:
    return Rel(a, b, ((x, y) for x in a for y in b), validate=False)


def empty(a: FinSet, b: FinSet) -> Rel:
    return Rel(a, b, ())


def graph(a: FinSet, b: FinSet, mapping: Dict[Atom, Atom], name: str = "") -> Rel:
    """Graph of a partial function given as a dict; values must lie in `b`."""
    for x, y in mapping.items():
        if y not in b:
            raise StructureError(f"{name or 'graph'}: value {y!r} of {x!r} is not in {b.id!r}")
    return Rel(a, b, mapping.items(), name=name)


def diagonal(a: FinSet) -> Rel:
    return MapRel(a, product(a, a), lambda x: (x, x), name=f"diag_{a.id}")


def counit(a: FinSet) -> Rel:
    return MapRel(a, point(), lambda x: POINT, name=f"eps_{a.id}")


# Structural bijections of the cartesian monoidal structure


def swap(a: FinSet, b: FinSet) -> Rel:
    flip = lambda p: (p[1], p[0])  # noqa: E731
    return MapRel(product(a, b), product(b, a), flip, flip, name="swap")


def assoc(a: FinSet, b: FinSet, c: FinSet) -> Rel:
    """(A x B) x C -> A x (B x C)."""
    return MapRel(
        product(product(a, b), c),
        product(a, product(b, c)),
        lambda p: (p[0][0], (p[0][1], p[1])),
        lambda p: ((p[0], p[1][0]), p[1][1]),
        name="assoc",
    )


def unit_left(a: FinSet) -> Rel:
    """pt x A -> A."""
    return MapRel(product(point(), a), a, lambda p: p[1], lambda x: (POINT, x), name="lambda")


def unit_right(a: FinSet) -> Rel:
    """A x pt -> A."""
    return MapRel(product(a, point()), a, lambda p: p[0], lambda x: (x, POINT), name="rho")


def middle_swap(a: FinSet, b: FinSet, c: FinSet, d: FinSet) -> Rel:
    """(A x B) x (C x D) -> (A x C) x (B x D)."""
    shuffle = lambda p: ((p[0][0], p[1][0]), (p[0][1], p[1][1]))  # noqa: E731
    return MapRel(
        product(product(a, b), product(c, d)),
        product(product(a, c), product(b, d)),
        shuffle,
        shuffle,
        name="mid",
    )


# Comparison and shape


def equal(r1: Rel, r2: Rel) -> Tuple[bool, Any]:
    """Equality of relations with a witness from the symmetric difference."""
    if r1.src != r2.src or r1.dst != r2.dst:
        return False, {"endpoints": [f"{r1.src.id}->{r1.dst.id}", f"{r2.src.id}->{r2.dst.id}"]}
    left_only = r1.pairs - r2.pairs
    right_only = r2.pairs - r1.pairs
    if not left_only and not right_only:
        return True, None
    key = sort_key(r1.src, r1.dst)
    if left_only:
        return False, {"pair": min(left_only, key=key), "only_in": "left"}
    return False, {"pair": min(right_only, key=key), "only_in": "right"}


def domain(r: Rel) -> FinSet:
    return r.src.subset(f"dom({r.label})", lambda x: bool(r.image(x)))


def image(r: Rel) -> FinSet:
    return r.dst.subset(f"im({r.label})", lambda y: bool(r.preimage(y)))


def classify(r: Rel) -> Dict[str, bool]:
    """Set-level surjectivity, injectivity and surmersion flags of a relation."""
    surjective = all(r.preimage(y) for y in r.dst)
    cosurjective = all(r.image(x) for x in r.src)
    injective = all(len(r.preimage(y)) <= 1 for y in r.dst)
    coinjective = all(len(r.image(x)) <= 1 for x in r.src)
    rt = transpose(r)
    surmersion, _ = equal(compose(rt, r), identity(r.dst))
    cosurmersion, _ = equal(compose(r, rt), identity(r.src))
    _, sharp, _ = compose_sharp(r, rt)
    return {
        "surjective": surjective,
        "injective": injective,
        "cosurjective": cosurjective,
        "coinjective": coinjective,
        "surmersion": surmersion,
        "cosurmersion": cosurmersion,
        "sharp": sharp,
    }


__all__ = [
    "Rel",
    "MapRel",
    "CrossRel",
    "compose",
    "compose_sharp",
    "chain",
    "chain_sharp",
    "transpose",
    "cross",
    "materialize",
    "identity",
    "full",
    "empty",
    "graph",
    "diagonal",
    "counit",
    "swap",
    "assoc",
    "unit_left",
    "unit_right",
    "middle_swap",
    "equal",
    "domain",
    "image",
    "classify",
    "ProductSet",
]
