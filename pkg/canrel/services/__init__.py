"""
CANREL Services Layer
Entry points the command line calls.
"""

from canrel.services.validation_service import ValidationService
from canrel.services.construction_service import ConstructionService, ConstructOp
from canrel.services.linear_service import LinearOp, LinearService
from canrel.services.enumeration_service import EnumerationCheck, EnumerationService

__all__ = [
    "ValidationService",
    "ConstructionService",
    "ConstructOp",
    "LinearService",
    "LinearOp",
    "EnumerationService",
    "EnumerationCheck",
]
