"""
CANREL Document Models
Pydantic schemas for the self-describing JSON documents, one per kind.
"""

import re
from math import gcd
from typing import Annotated, Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator

RATIONAL = re.compile(r"^(-?\d+)/(\d+)$")

Pair = List[Any]
Pairs = List[Pair]


def check_rational(text: str) -> str:
    """Accept only reduced "p/q" with q > 0."""
    match = RATIONAL.match(text)
    if not match:
        raise ValueError(f"{text!r} is not a rational of the form p/q")
    p, q = int(match.group(1)), int(match.group(2))
    if q == 0:
        raise ValueError(f"{text!r} has a zero denominator")
    if gcd(abs(p), q) != 1 or match.group(1) == "-0":
        raise ValueError(f"{text!r} is not in lowest terms")
    return text


RationalRows = List[List[str]]


class DocumentModel(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)


class SetDocument(DocumentModel):
    kind: Literal["set"] = "set"
    id: str = "A"
    elements: List[Any]


class RelationDocument(DocumentModel):
    kind: Literal["relation"] = "relation"
    name: str = ""
    src: List[Any]
    dst: List[Any]
    pairs: Pairs


class GroupoidDocument(DocumentModel):
    """Tables as lists: source/target [arrow, object], unit [object, arrow],
    comp [g, h, gh], inv [g, g⁻¹]. Inside a double, arrows and objects may be
    omitted and default to the squares and the side arrows."""

    kind: Literal["groupoid"] = "groupoid"
    id: str = "G"
    arrows: Optional[List[Any]] = None
    objects: Optional[List[Any]] = None
    source: Pairs
    target: Pairs
    unit: Pairs
    comp: List[List[Any]]
    inv: Pairs


class DoubleDocument(DocumentModel):
    kind: Literal["double"] = "double"
    id: str = "D"
    squares: List[Any]
    side_h: GroupoidDocument = Field(alias="sideH")
    side_v: GroupoidDocument = Field(alias="sideV")
    hstruct: GroupoidDocument
    vstruct: GroupoidDocument


class HopfoidDocument(DocumentModel):
    kind: Literal["hopfoid"] = "hopfoid"
    id: str = "hopfoid"
    carrier: List[Any]
    base: List[Any]
    target: Pairs
    source: Pairs
    unit: Pairs
    product: Pairs
    coproduct: Pairs
    antipode: Pairs
    carrier_counit: Pairs = Field(alias="carrierCounit")
    carrier_star: Pairs = Field(alias="carrierStar")
    base_coproduct: Pairs = Field(alias="baseCoproduct")
    base_counit: Pairs = Field(alias="baseCounit")
    base_star: Pairs = Field(alias="baseStar")


class MatrixDocument(DocumentModel):
    """Rows of "p/q" strings. With `src` and `dst` forms the rows span the
    graph of a canonical relation; with `form` they span a subspace; bare
    rows are a linear map (use `cols` when there are no rows)."""

    kind: Literal["matrix"] = "matrix"
    rows: RationalRows
    cols: Optional[int] = Field(default=None, ge=0)
    form: Optional[RationalRows] = None
    src: Optional[RationalRows] = None
    dst: Optional[RationalRows] = None

    @field_validator("rows", "form", "src", "dst")
    @classmethod
    def rationals_reduced(cls, value):
        if value is not None:
            for row in value:
                for entry in row:
                    check_rational(entry)
        return value


class ChainDocument(DocumentModel):
    kind: Literal["chain"] = "chain"
    legs: List[MatrixDocument] = Field(min_length=1)


class CheckDocument(DocumentModel):
    name: str
    passed: bool
    witness: Any = None
    detail: Optional[str] = None


class ReportDocument(DocumentModel):
    kind: Literal["report"] = "report"
    subject: str
    checks: List[CheckDocument]
    notes: List[str] = []
    summary: Dict[str, int] = {}


class SimplicialDocument(DocumentModel):
    kind: Literal["simplicial"] = "simplicial"
    levels: List[List[Any]]
    faces: List[List[Pairs]]
    degeneracies: List[List[Pairs]]


class LinearDocument(DocumentModel):
    kind: Literal["linear"] = "linear"
    op: str
    results: Dict[str, MatrixDocument]
    flags: Dict[str, Any] = {}


Document = Annotated[
    Union[
        SetDocument,
        RelationDocument,
        GroupoidDocument,
        DoubleDocument,
        HopfoidDocument,
        MatrixDocument,
        ChainDocument,
        ReportDocument,
        SimplicialDocument,
        LinearDocument,
    ],
    Field(discriminator="kind"),
]

DOCUMENT_ADAPTER: TypeAdapter = TypeAdapter(Document)

KINDS = (
    "set",
    "relation",
    "groupoid",
    "double",
    "hopfoid",
    "matrix",
    "chain",
    "report",
    "simplicial",
    "linear",
)
