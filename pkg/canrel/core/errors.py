"""
CANREL Errors
Exception hierarchy shared by every module.
"""

from typing import Any, Optional


class CanrelError(Exception):
    """Base class for all engine errors."""


class StructureError(CanrelError):
    """Endpoint, shape or carrier mismatch, or a malformed table."""


class ValidationFailed(CanrelError):
    """An input that must pass a check does not."""

    def __init__(self, message: str, report: Any = None):
        super().__init__(message)
        self.report = report


class ReconstructionError(CanrelError):
    """A bridge or reconstruction found a missing or non-unique witness."""

    def __init__(self, message: str, element: Any = None):
        super().__init__(message)
        self.element = element


class SharpnessError(CanrelError):
    """A composition that must have unique middle witnesses does not."""

    def __init__(self, message: str, witness: Any = None):
        super().__init__(message)
        self.witness = witness


class NotCoisotropicError(CanrelError):
    """Reduction was asked for on a subspace that is not coisotropic."""


class DimensionError(CanrelError):
    """Linear data with incompatible dimensions."""


class DocumentError(CanrelError):
    """
    A document could not be parsed; `position` is a JSON pointer and
    `line`/`column` locate it in the document text when known.
    """

    def __init__(
        self,
        message: str,
        position: Optional[str] = None,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.reason = message
        if position and line is not None:
            message = f"{message} (at {position}, line {line} column {column})"
        elif position:
            message = f"{message} (at {position})"
        super().__init__(message)
        self.position = position
        self.line = line
        self.column = column


class BoundsError(CanrelError):
    """Enumeration bounds above the configured hard limit."""
