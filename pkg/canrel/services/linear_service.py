"""
CANREL Linear Service
Operations of the linear symplectic category on matrix and chain documents.
"""

import enum
import logging
from typing import Any, List, Sequence

from canrel.core import Settings
from canrel.core.errors import DimensionError, StructureError
from canrel.models.codec import LinearResult, kind_of
from canrel.symplin.chains import CorrChain, ww_compose, ww_two_term
from canrel.symplin.cotangent import cotangent_lift
from canrel.symplin.reduction import factor, induced_iso, reduce
from canrel.symplin.relations import (
    LinCanRel,
    chain_lin,
    compose_lin,
    dom_im,
    lin_equal,
    lin_identity,
    lin_transpose,
)
from canrel.symplin.spaces import Matrix, Subspace, rank

logger = logging.getLogger(__name__)


class LinearOp(str, enum.Enum):
    COMPOSE = "compose"
    REDUCE = "reduce"
    FACTOR = "factor"
    LIFT = "lift"
    TWO_TERM = "two-term"
    DOM_IM = "dom-im"
    INDUCED_ISO = "induced-iso"


def is_reduction(l: LinCanRel) -> bool:
    """lᵗ followed by l is the identity of the target."""
    return lin_equal(chain_lin(lin_transpose(l), l), lin_identity(l.dst))[0]


def is_coreduction(l: LinCanRel) -> bool:
    return lin_equal(chain_lin(l, lin_transpose(l)), lin_identity(l.src))[0]


class LinearService:
    """Service for exact rational linear symplectic operations."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def run(self, op: str, inputs: Sequence[Any]) -> LinearResult:
        """
        Run one linear operation.

        Args:
            op: One of LinearOp
            inputs: Parsed matrix or chain documents

        Raises:
            ValueError: If the operation is not supported
            StructureError: If the inputs do not fit the operation
            DimensionError: If an ambient space exceeds settings.max_ambient_dim
            NotCoisotropicError: If `reduce` gets a subspace that is not coisotropic
        """
        try:
            op = LinearOp(op)
        except ValueError:
            supported = ", ".join(o.value for o in LinearOp)
            raise ValueError(f"Unsupported linear operation: {op}. Supported: {supported}") from None
        for value in inputs:
            self._check_size(value)

        handler = {
            LinearOp.COMPOSE: self.compose,
            LinearOp.REDUCE: self.reduce,
            LinearOp.FACTOR: self.factor,
            LinearOp.LIFT: self.lift,
            LinearOp.TWO_TERM: self.two_term,
            LinearOp.DOM_IM: self.dom_im,
            LinearOp.INDUCED_ISO: self.induced_iso,
        }[op]
        result = handler(list(inputs))
        logger.debug("linear %s: %s", op.value, sorted(result.results))
        return result

    def compose(self, inputs: List[Any]) -> LinearResult:
        """Collapse a chain document or two or more lagrangian relations."""
        if len(inputs) == 1 and isinstance(inputs[0], CorrChain):
            chain = inputs[0]
        else:
            chain = CorrChain(tuple(self._expect(v, LinCanRel, "compose") for v in inputs))
        if len(chain.legs) == 1:
            return LinearResult("compose", {"result": chain.legs[0]}, {})
        if len(chain.legs) == 2:
            result, flags = compose_lin(*chain.legs)
            return LinearResult("compose", {"result": result}, flags)
        result, junctions = ww_compose(chain)
        flags = {
            "transversal": all(j["transversal"] for j in junctions),
            "strongly_transversal": all(j["strongly_transversal"] for j in junctions),
            "junctions": junctions,
        }
        return LinearResult("compose", {"result": result}, flags)

    def reduce(self, inputs: List[Any]) -> LinearResult:
        c = self._single(inputs, Subspace, "reduce")
        data = reduce(c)
        return LinearResult(
            "reduce",
            {"reduction": data.rel, "projection": data.projection},
            {"reduction": is_reduction(data.rel)},
        )

    def factor(self, inputs: List[Any]) -> LinearResult:
        l = self._single(inputs, LinCanRel, "factor")
        f = factor(l)
        recomposes, _ = lin_equal(chain_lin(f.reduction, f.iso, f.coreduction), l)
        return LinearResult(
            "factor",
            {"reduction": f.reduction, "iso": f.iso, "coreduction": f.coreduction},
            {"recomposes": recomposes},
        )

    def lift(self, inputs: List[Any]) -> LinearResult:
        f = self._single(inputs, Matrix, "lift")
        lifted = cotangent_lift(f)
        return LinearResult(
            "lift",
            {"lift": lifted},
            {
                "surjective": rank(f) == f.rows,
                "injective": rank(f) == f.cols,
                "reduction": is_reduction(lifted),
                "coreduction": is_coreduction(lifted),
            },
        )

    def two_term(self, inputs: List[Any]) -> LinearResult:
        chain = self._single(inputs, CorrChain, "two-term")
        composite, _ = ww_compose(chain)
        c, r = ww_two_term(chain)
        recomposes, _ = lin_equal(chain_lin(c, r), composite)
        return LinearResult(
            "two-term",
            {"coreduction": c, "reduction": r},
            {"recomposes": recomposes, "coreduction": is_coreduction(c), "reduction": is_reduction(r)},
        )

    def dom_im(self, inputs: List[Any]) -> LinearResult:
        dom, im = dom_im(self._single(inputs, LinCanRel, "dom-im"))
        return LinearResult("dom-im", {"domain": dom, "image": im}, {})

    def induced_iso(self, inputs: List[Any]) -> LinearResult:
        iso = induced_iso(self._single(inputs, LinCanRel, "induced-iso"))
        return LinearResult("induced-iso", {"iso": iso.as_rel(), "matrix": iso.matrix}, {})

    def _single(self, inputs: List[Any], expected: type, op: str) -> Any:
        if len(inputs) != 1:
            raise StructureError(f"{op} takes one input, got {len(inputs)}")
        return self._expect(inputs[0], expected, op)

    def _expect(self, value: Any, expected: type, op: str) -> Any:
        if isinstance(value, expected):
            return value
        raise StructureError(f"{op} does not apply to a {kind_of(value)} document")

    def _check_size(self, value: Any) -> None:
        limit = self.settings.max_ambient_dim
        if isinstance(value, CorrChain):
            dims = [leg.src.dim for leg in value.legs] + [value.dst.dim]
        elif isinstance(value, LinCanRel):
            dims = [value.src.dim, value.dst.dim]
        elif isinstance(value, Subspace):
            dims = [value.ambient.dim]
        elif isinstance(value, Matrix):
            dims = [2 * value.rows, 2 * value.cols]
        else:
            dims = []
        if any(d > limit for d in dims):
            raise DimensionError(f"ambient dimension {max(dims)} exceeds the limit {limit} (CANREL_MAX_AMBIENT_DIM)")


def get_supported_ops():
    return [o.value for o in LinearOp]
