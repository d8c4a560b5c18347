"""
CANREL Validation Service
Runs the checker that belongs to a parsed document.
"""

import logging
from typing import Any, Optional

from canrel.core import Settings
from canrel.core.errors import StructureError
from canrel.core.report import Report
from canrel.dbl.double import FinDoubleGroupoid, validate_double
from canrel.dbl.hopfoid import Hopfoid, check_hopfoid
from canrel.grpd.groupoid import FinGroupoid, validate
from canrel.models.codec import LinearResult, kind_of
from canrel.relcat.checks import check_simplicial
from canrel.relcat.relations import Rel, classify
from canrel.relcat.sets import FinSet
from canrel.relcat.structures import SimplicialRel
from canrel.symplin.chains import CorrChain, ww_compose
from canrel.symplin.relations import LinCanRel
from canrel.symplin.spaces import Subspace, classify_subspace

logger = logging.getLogger(__name__)


class ValidationService:
    """Service for checking documents against their module validators."""

    def __init__(self, settings: Settings):
        self.settings = settings

    def validate(self, value: Any, kind: Optional[str] = None, depth: Optional[int] = None) -> Report:
        """
        Check a parsed document.

        Args:
            value: Domain value returned by `canrel.models.parse`
            kind: Expected document kind; None accepts any
            depth: Simplicial depth, defaults to the whole object

        Raises:
            StructureError: If the document is not of the expected kind
        """
        actual = kind_of(value)
        if kind is not None and kind != actual:
            raise StructureError(f"expected a {kind} document, got {actual}")
        logger.debug("validating %s document", actual)

        if isinstance(value, FinGroupoid):
            return validate(value)
        if isinstance(value, FinDoubleGroupoid):
            return validate_double(value)
        if isinstance(value, Hopfoid):
            return check_hopfoid(value)
        if isinstance(value, SimplicialRel):
            return check_simplicial(value, value.depth if depth is None else depth)
        if isinstance(value, Report):
            return value
        if isinstance(value, Rel):
            return self._flags_report(f"relation:{value.name}", classify(value))
        if isinstance(value, FinSet):
            report = Report(f"set:{value.id}")
            report.add("elements-distinct", True)
            return report
        if isinstance(value, LinCanRel):
            return self._linear_report(value)
        if isinstance(value, Subspace):
            return self._flags_report("subspace", classify_subspace(value))
        if isinstance(value, CorrChain):
            return self._chain_report(value)
        if isinstance(value, LinearResult):
            return self._flags_report(f"linear:{value.op}", value.flags)
        report = Report("matrix")
        report.add("well-formed", True)
        return report

    def _flags_report(self, subject: str, flags: dict) -> Report:
        report = Report(subject)
        report.add("well-formed", True)
        report.notes.extend(f"{name}: {str(flag).lower()}" for name, flag in flags.items())
        return report

    def _linear_report(self, l: LinCanRel) -> Report:
        report = Report(f"lagrangian:{l.src.id}->{l.dst.id}")
        report.add("lagrangian", True)
        dom, im = Subspace(l.src, l.src_part), Subspace(l.dst, l.dst_part)
        report.add("domain-coisotropic", classify_subspace(dom)["coisotropic"], f"dim {dom.dim}")
        report.add("image-coisotropic", classify_subspace(im)["coisotropic"], f"dim {im.dim}")
        return report

    def _chain_report(self, c: CorrChain) -> Report:
        report = Report(f"chain:{len(c.legs)}")
        report.add("legs-meet", True)
        _, flags = ww_compose(c)
        for i, junction in enumerate(flags):
            report.notes.extend(f"junction {i} {name}: {str(flag).lower()}" for name, flag in junction.items())
        return report
