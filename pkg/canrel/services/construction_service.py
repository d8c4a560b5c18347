"""
CANREL Construction Service
Builds groupoids, doubles, hopfoids and simplicial objects from documents.
"""

import enum
import logging
from typing import Any, Callable, Dict, Optional

from canrel.core import Settings
from canrel.core.errors import StructureError
from canrel.dbl.core_groupoid import core
from canrel.dbl.double import FinDoubleGroupoid, transpose_double
from canrel.dbl.examples import DoubleKind, build_examples
from canrel.dbl.hopfoid import Hopfoid, group_shaped_hopfoid, hopfoid_dual, to_hopfoid
from canrel.dbl.induced import induced_groupoid, orbit_partition
from canrel.dbl.reconstruct import from_hopfoid
from canrel.dbl.simplicial import hopfoid_simplicial
from canrel.grpd.groupoid import FinGroupoid
from canrel.grpd.nerve import nerve
from canrel.grpd.standard import inertia
from canrel.models.codec import kind_of
from canrel.relcat.sets import FinSet

logger = logging.getLogger(__name__)


class ConstructOp(str, enum.Enum):
    CORE = "core"
    HOPFOID = "hopfoid"
    INDUCED = "induced"
    INERTIA = "inertia"
    NERVE = "nerve"
    EXAMPLE = "example"
    TRANSPOSE = "transpose"
    DUAL = "dual"
    RECONSTRUCT = "reconstruct"
    ORBITS = "orbits"


class ConstructionService:
    """Service for the constructions of the groupoid and double modules."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def construct(
        self,
        value: Any,
        op: str,
        depth: Optional[int] = None,
        kind: Optional[str] = None,
    ) -> Any:
        """
        Apply a construction to a parsed document.

        Args:
            value: FinGroupoid, FinDoubleGroupoid or Hopfoid
            op: One of ConstructOp
            depth: Nerve depth, defaults to settings.default_depth
            kind: Double kind for `example` (dmain | dinertia)

        Raises:
            ValueError: If the operation is not supported
            StructureError: If the operation does not apply to this document kind
        """
        try:
            op = ConstructOp(op)
        except ValueError:
            supported = ", ".join(o.value for o in ConstructOp)
            raise ValueError(f"Unsupported operation: {op}. Supported: {supported}") from None

        table = self._table(depth if depth is not None else self.settings.default_depth, kind)
        build = table[op].get(type(value))
        if build is None:
            accepted = ", ".join(sorted(t.__name__ for t in table[op]))
            raise StructureError(f"{op.value} does not apply to a {kind_of(value)} document (accepts {accepted})")
        result = build(value)
        logger.debug("%s(%s) -> %s", op.value, getattr(value, "id", "?"), type(result).__name__)
        return result

    def _table(self, depth: int, kind: Optional[str]) -> Dict[ConstructOp, Dict[type, Callable[[Any], Any]]]:
        return {
            ConstructOp.CORE: {FinDoubleGroupoid: core},
            ConstructOp.HOPFOID: {FinDoubleGroupoid: to_hopfoid, FinGroupoid: group_shaped_hopfoid},
            ConstructOp.INDUCED: {FinDoubleGroupoid: induced_groupoid},
            ConstructOp.INERTIA: {FinGroupoid: inertia},
            ConstructOp.NERVE: {
                FinGroupoid: lambda g: nerve(g, depth),
                Hopfoid: lambda h: hopfoid_simplicial(h, depth),
                FinDoubleGroupoid: lambda d: hopfoid_simplicial(to_hopfoid(d), depth),
            },
            ConstructOp.EXAMPLE: {FinGroupoid: lambda g: build_examples(kind or DoubleKind.DMAIN.value, g)},
            ConstructOp.TRANSPOSE: {FinDoubleGroupoid: transpose_double},
            ConstructOp.DUAL: {
                Hopfoid: hopfoid_dual,
                FinDoubleGroupoid: lambda d: hopfoid_dual(to_hopfoid(d)),
            },
            ConstructOp.RECONSTRUCT: {Hopfoid: lambda h: from_hopfoid(h)[0]},
            ConstructOp.ORBITS: {
                Hopfoid: self._orbits,
                FinDoubleGroupoid: lambda d: self._orbits(to_hopfoid(d)),
            },
        }

    def _orbits(self, h: Hopfoid) -> FinSet:
        _, classes = orbit_partition(h)
        return FinSet(f"orbits({h.id})", classes)


def get_supported_ops():
    return [o.value for o in ConstructOp]
