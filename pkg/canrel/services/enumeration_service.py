"""
CANREL Enumeration Service
Exhaustive checks over all small groupoids and double groupoids.

Groupoids are listed up to isomorphism as disjoint unions of components
pair(k) x K with K a small group. Doubles are generated exhaustively: every
connected double over a pair of listed side groupoids, then disjoint unions
of those. Members of the dmain, dinertia, crossed-module and product
families go first so a class found there keeps its family name; duplicates
are dropped by isomorphism search.
"""

import enum
import logging
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from itertools import product as iproduct
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from canrel.core import Settings
from canrel.core.errors import BoundsError, CanrelError, SharpnessError
from canrel.core.report import Report
from canrel.dbl.core_groupoid import core
from canrel.dbl.double import FinDoubleGroupoid, transpose_double, validate_double
from canrel.dbl.examples import CrossedModule, check_crossed, crossed, dinertia, dmain, product_double
from canrel.dbl.generate import connected_doubles, unions
from canrel.dbl.hopfoid import check_hopfoid, to_hopfoid
from canrel.dbl.induced import check_double_lemmas, induced_groupoid, orbit_partition
from canrel.dbl.reconstruct import find_double_isomorphism, from_hopfoid
from canrel.dbl.simplicial import hopfoid_simplicial
from canrel.grpd.bridge import round_trip
from canrel.grpd.groupoid import FinGroupoid, orbits, validate
from canrel.grpd.groups import GroupTable, from_function, homomorphisms, small_groups
from canrel.grpd.nerve import nerve
from canrel.grpd.standard import disjoint_union, group_groupoid, pair_groupoid, product_groupoid
from canrel.relcat.checks import check_simplicial
from canrel.relcat.sets import Atom, FinSet

logger = logging.getLogger(__name__)


class EnumerationCheck(str, enum.Enum):
    GROUPOID = "groupoid"
    ZAKRZEWSKI = "zakrzewski"
    NERVE = "nerve"
    DOUBLE = "double"
    CORE = "core"
    HOPFOID = "hopfoid"
    ROUNDTRIP = "roundtrip"
    ORBITS = "orbits"
    INDUCED = "induced"
    LEMMAS = "lemmas"
    SIMPLICIAL = "simplicial"


GROUPOID_CHECKS = (EnumerationCheck.GROUPOID, EnumerationCheck.ZAKRZEWSKI, EnumerationCheck.NERVE)

DEFAULT_CHECKS = (
    EnumerationCheck.GROUPOID,
    EnumerationCheck.ZAKRZEWSKI,
    EnumerationCheck.DOUBLE,
    EnumerationCheck.CORE,
    EnumerationCheck.HOPFOID,
    EnumerationCheck.ROUNDTRIP,
    EnumerationCheck.ORBITS,
    EnumerationCheck.INDUCED,
    EnumerationCheck.LEMMAS,
    EnumerationCheck.SIMPLICIAL,
)

MAX_GROUP_ORDER = 8


def parse_checks(names: Optional[Iterable[str]]) -> Tuple[EnumerationCheck, ...]:
    """
    Raises:
        ValueError: If a name is not a supported check
    """
    if not names:
        return DEFAULT_CHECKS
    checks = []
    for name in names:
        try:
            checks.append(EnumerationCheck(name.strip()))
        except ValueError:
            supported = ", ".join(c.value for c in EnumerationCheck)
            raise ValueError(f"Unsupported check: {name}. Supported: {supported}") from None
    return tuple(dict.fromkeys(checks))


# Groupoids


def _component(k: int, K: GroupTable) -> FinGroupoid:
    if k == 1:
        return group_groupoid(K)
    return product_groupoid(pair_groupoid(FinSet(f"[{k}]", range(k))), group_groupoid(K), id=f"pair{k}x{K.name}")


def _multisets(sizes: Sequence[int], budget: int, start: int = 0) -> Iterator[Tuple[int, ...]]:
    yield ()
    for i in range(start, len(sizes)):
        if sizes[i] <= budget:
            for rest in _multisets(sizes, budget - sizes[i], i):
                yield (i,) + rest


def enumerate_groupoids(max_arrows: int) -> List[FinGroupoid]:
    """One nonempty groupoid per isomorphism class with at most max_arrows arrows."""
    components: List[Tuple[int, GroupTable]] = []
    k = 1
    while k * k <= max_arrows:
        components.extend((k, K) for K in small_groups(min(MAX_GROUP_ORDER, max_arrows // (k * k))))
        k += 1
    sizes = [k * k * len(K) for k, K in components]
    result = []
    for choice in _multisets(sizes, max_arrows):
        if not choice:
            continue
        parts = [_component(*components[i]) for i in choice]
        result.append(parts[0] if len(parts) == 1 else disjoint_union(*parts))
    logger.debug("enumerated %d groupoids with at most %d arrows", len(result), max_arrows)
    return result


# Doubles


def automorphism_group(H: GroupTable) -> Tuple[GroupTable, Dict[Atom, Dict[Atom, Atom]]]:
    """Aut(H) as a group table on image tuples, with each element as a map."""
    index = {a: i for i, a in enumerate(H.elements)}
    maps = {}
    for f in homomorphisms(H, H):
        if len(set(f.values())) == len(H):
            maps[tuple(f[a] for a in H.elements)] = f

    def op(x, y):
        return tuple(x[index[y[i]]] for i in range(len(H)))

    return from_function(maps, op, f"Aut({H.name})"), maps


def crossed_modules(G: GroupTable, H: GroupTable) -> Iterator[CrossedModule]:
    aut, maps = automorphism_group(H)
    n = 0
    for t in homomorphisms(H, G):
        for action in homomorphisms(G, aut):
            c = CrossedModule(G, H, t, {g: maps[action[g]] for g in G}, id=f"({H.name}->{G.name})#{n}")
            n += 1
            if check_crossed(c).passed:
                yield c


def _candidate_doubles(groupoids: List[FinGroupoid], max_squares: int, max_arrows: int) -> List[FinDoubleGroupoid]:
    candidates = []
    for g in groupoids:
        if len(g.arrows) <= max_squares:
            candidates.append(dmain(g))
        if len(g.arrows) ** 2 <= max_squares and len(g.objects) ** 2 <= max_arrows:
            candidates.append(dinertia(g))
    groups = small_groups(min(MAX_GROUP_ORDER, max_squares, max_arrows))
    for G, H in iproduct(groups, repeat=2):
        if len(G) * len(H) > max_squares:
            continue
        candidates.extend(crossed(c) for c in crossed_modules(G, H))
        candidates.append(product_double((G, H)))
    return candidates + [transpose_double(d) for d in candidates]


def _shape(d: FinDoubleGroupoid) -> Tuple[int, ...]:
    return len(d.squares), len(d.side_h.arrows), len(d.side_v.arrows), len(d.base)


class _Classes:
    """Doubles kept one per isomorphism class, bucketed by shape."""

    def __init__(self):
        self.buckets: Dict[Tuple[int, ...], List[FinDoubleGroupoid]] = defaultdict(list)
        self.members: List[FinDoubleGroupoid] = []

    def admit(self, d: FinDoubleGroupoid) -> bool:
        bucket = self.buckets[_shape(d)]
        if any(find_double_isomorphism(d, e) is not None for e in bucket):
            return False
        bucket.append(d)
        self.members.append(d)
        return True


def enumerate_doubles(max_squares: int, max_arrows: int) -> List[FinDoubleGroupoid]:
    """Every double with at most max_squares squares and sides within max_arrows, one per isomorphism class."""
    groupoids = enumerate_groupoids(max_arrows)
    connected = _Classes()
    for d in connected_doubles(groupoids, max_squares):
        connected.admit(d)
    candidates = _candidate_doubles(groupoids, max_squares, max_arrows)
    candidates += connected.members
    candidates += unions(connected.members, max_squares, max_arrows)

    classes = _Classes()
    for d in candidates:
        if len(d.squares) > max_squares or len(d.side_h.arrows) > max_arrows or len(d.side_v.arrows) > max_arrows:
            continue
        classes.admit(d)
    logger.debug(
        "enumerated %d doubles (%d connected) from %d candidates",
        len(classes.members), len(connected.members), len(candidates),
    )
    return classes.members


def bad_groupoid() -> FinGroupoid:
    """Z2 with the square of its generator set to itself."""
    g = group_groupoid(small_groups(2)[1])
    a = next(x for x in g.arrows if not g.is_unit(x))
    comp = dict(g.comp)
    comp[(a, a)] = a
    return FinGroupoid(g.arrows, g.objects, g.source, g.target, g.unit, comp, g.inv, id="bad(Z2)")


# Checks


def _failures(report: Report) -> List[str]:
    return [c.name for c in report.failures]


def check_groupoid(g: FinGroupoid, checks: Sequence[EnumerationCheck]) -> Report:
    report = Report(f"groupoid:{g.id}")
    valid = validate(g)
    if EnumerationCheck.GROUPOID in checks:
        report.add(f"groupoid:{g.id}", valid.passed, _failures(valid))
    if not valid.passed:
        return report
    if EnumerationCheck.ZAKRZEWSKI in checks:
        report.add(f"zakrzewski:{g.id}", round_trip(g) == g, "round trip changed the tables")
    if EnumerationCheck.NERVE in checks:
        report.add(f"nerve:{g.id}", *_passed(check_simplicial(nerve(g, 3), 3)))
    return report


def _passed(report: Report) -> Tuple[bool, List[str]]:
    return report.passed, _failures(report)


def check_double(d: FinDoubleGroupoid, checks: Sequence[EnumerationCheck]) -> Report:
    report = Report(f"double:{d.id}")
    valid = validate_double(d)
    if EnumerationCheck.DOUBLE in checks:
        report.add(f"double:{d.id}", *_passed(valid))
    if not valid.passed:
        return report
    try:
        _double_checks(report, d, checks)
    except CanrelError as e:
        report.add(f"error:{d.id}", False, f"{type(e).__name__}: {e}")
    return report


def _double_checks(report: Report, d: FinDoubleGroupoid, checks: Sequence[EnumerationCheck]) -> None:
    h = to_hopfoid(d)
    if EnumerationCheck.CORE in checks:
        report.add(f"core:{d.id}", *_passed(validate(core(d))))
    if EnumerationCheck.HOPFOID in checks:
        report.add(f"hopfoid:{d.id}", *_passed(check_hopfoid(h)))
    if EnumerationCheck.ROUNDTRIP in checks:
        rebuilt, transposed = from_hopfoid(h)
        expected = transpose_double(d) if transposed else d
        found = find_double_isomorphism(rebuilt, expected, hint={s: s for s in d.squares})
        report.add(f"roundtrip:{d.id}", found is not None, {"transposed": transposed})
    if EnumerationCheck.INDUCED in checks or EnumerationCheck.ORBITS in checks:
        ind = induced_groupoid(d)
        if EnumerationCheck.INDUCED in checks:
            report.add(f"induced:{d.id}", *_passed(validate(ind)))
        if EnumerationCheck.ORBITS in checks:
            _, classes = orbit_partition(h)
            expected = sorted(sorted(map(repr, c)) for c in orbits(ind))
            found = sorted(sorted(map(repr, c)) for c in classes)
            report.add(f"orbits:{d.id}", found == expected, {"hopfoid": found, "induced": expected})
    if EnumerationCheck.LEMMAS in checks:
        report.add(f"lemmas:{d.id}", *_passed(check_double_lemmas(d)))
    if EnumerationCheck.SIMPLICIAL in checks:
        try:
            x = hopfoid_simplicial(h, 2)
        except SharpnessError as e:
            report.add(f"simplicial:{d.id}", False, e.witness or str(e), detail=str(e))
        else:
            report.add(f"simplicial:{d.id}", *_passed(check_simplicial(x, 2)))


def _run_one(item: Tuple[str, object, Tuple[EnumerationCheck, ...]]) -> Report:
    kind, structure, checks = item
    if kind == "groupoid":
        return check_groupoid(structure, checks)
    return check_double(structure, checks)


class EnumerationService:
    """Service for the exhaustive small-structure suites."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def check_bounds(self, max_arrows: int, max_squares: int) -> None:
        """
        Raises:
            BoundsError: If a bound exceeds the configured hard limit
        """
        s = self.settings
        if max_arrows > s.enumerate_hard_limit_arrows:
            raise BoundsError(
                f"--max-arrows {max_arrows} is above the hard limit {s.enumerate_hard_limit_arrows}; "
                f"lower it or raise CANREL_ENUMERATE_HARD_LIMIT_ARROWS (groups are catalogued up to order {MAX_GROUP_ORDER})"
            )
        if max_squares > s.enumerate_hard_limit_squares:
            raise BoundsError(
                f"--max-squares {max_squares} is above the hard limit {s.enumerate_hard_limit_squares}; "
                "lower it or raise CANREL_ENUMERATE_HARD_LIMIT_SQUARES"
            )
        if max_arrows < 0 or max_squares < 0:
            raise BoundsError("bounds must be non-negative")
        if max_arrows > MAX_GROUP_ORDER:
            raise BoundsError(f"groups are catalogued up to order {MAX_GROUP_ORDER}; use --max-arrows {MAX_GROUP_ORDER} or less")

    def run(
        self,
        max_arrows: Optional[int] = None,
        max_squares: Optional[int] = None,
        checks: Optional[Iterable[str]] = None,
        inject_bad: bool = False,
    ) -> Report:
        """
        Enumerate every structure within the bounds and run the selected checks.

        Each structure contributes one check per selected suite, named
        `suite:structure-id`; a failing check's witness lists the failing
        conditions. Ordering is deterministic.

        Raises:
            BoundsError: If a bound exceeds the hard limit
            ValueError: If a check name is unknown
        """
        max_arrows = self.settings.max_arrows if max_arrows is None else max_arrows
        max_squares = self.settings.max_squares if max_squares is None else max_squares
        self.check_bounds(max_arrows, max_squares)
        selected = parse_checks(checks)

        items: List[Tuple[str, object, Tuple[EnumerationCheck, ...]]] = []
        groupoid_checks = tuple(c for c in selected if c in GROUPOID_CHECKS)
        double_checks = tuple(c for c in selected if c not in GROUPOID_CHECKS)
        groupoids = enumerate_groupoids(max_arrows) if groupoid_checks else []
        if inject_bad:
            groupoids.append(bad_groupoid())
        items.extend(("groupoid", g, groupoid_checks or (EnumerationCheck.GROUPOID,)) for g in groupoids)
        doubles = enumerate_doubles(max_squares, max_arrows) if double_checks else []
        items.extend(("double", d, double_checks) for d in doubles)

        if self.settings.workers > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=self.settings.workers) as pool:
                reports = list(pool.map(_run_one, items))
        else:
            reports = [_run_one(item) for item in items]

        report = Report(f"enumerate:arrows<={max_arrows},squares<={max_squares}")
        for r in reports:
            report.checks.extend(r.checks)
            report.notes.extend(r.notes)
        report.notes.append(f"{len(groupoids)} groupoids, {len(doubles)} doubles")
        failed = len(report.failures)
        logger.info("enumeration: %d checks, %d counterexamples", len(report.checks), failed)
        return report
