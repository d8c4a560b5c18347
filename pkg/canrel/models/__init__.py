"""
CANREL Models
Document schemas and the codec between documents and domain values.
"""

from canrel.models.codec import LinearResult, kind_of, parse, parse_model, parse_text, serialize, to_payload
from canrel.models.documents import DOCUMENT_ADAPTER, KINDS, check_rational

__all__ = [
    "DOCUMENT_ADAPTER",
    "KINDS",
    "LinearResult",
    "check_rational",
    "kind_of",
    "parse",
    "parse_model",
    "parse_text",
    "serialize",
    "to_payload",
]
