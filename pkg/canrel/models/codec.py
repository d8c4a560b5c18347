"""
CANREL Document Codec
Conversion between JSON documents and domain values.

Output is canonical: elements and pairs are sorted by their JSON text, so
documents that differ only in order serialize to the same bytes.
"""

import json
import logging
import re
from dataclasses import dataclass, field
from json.decoder import scanstring
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import sympy as sp
from pydantic import ValidationError

from canrel.core.errors import CanrelError, DocumentError
from canrel.core.report import Check, Report, jsonable
from canrel.dbl.double import FinDoubleGroupoid
from canrel.dbl.hopfoid import Hopfoid
from canrel.grpd.groupoid import FinGroupoid
from canrel.models.documents import (
    DOCUMENT_ADAPTER,
    KINDS,
    ChainDocument,
    DoubleDocument,
    GroupoidDocument,
    HopfoidDocument,
    LinearDocument,
    MatrixDocument,
    RelationDocument,
    ReportDocument,
    SetDocument,
    SimplicialDocument,
)
from canrel.relcat.relations import Rel
from canrel.relcat.sets import Atom, FinSet, point, product
from canrel.relcat.structures import SimplicialRel
from canrel.symplin.chains import CorrChain
from canrel.symplin.relations import LinCanRel
from canrel.symplin.spaces import Matrix, Subspace, SympSpace, as_matrix, direct_sum, dual

logger = logging.getLogger(__name__)


@dataclass
class LinearResult:
    """Named linear outputs of one operation and its flags."""

    op: str
    results: Dict[str, Union[LinCanRel, Subspace, Matrix]]
    flags: Dict[str, Any] = field(default_factory=dict)


# Atoms and rationals


def to_atom(value: Any, position: str) -> Atom:
    if isinstance(value, bool) or value is None or isinstance(value, (float, dict)):
        raise DocumentError(f"{value!r} is not an atom (strings, integers or lists)", position)
    if isinstance(value, list):
        return tuple(to_atom(v, f"{position}/{i}") for i, v in enumerate(value))
    return value


def atom_key(atom: Atom) -> str:
    return json.dumps(jsonable(atom), ensure_ascii=False)


def parse_rational(text: str) -> sp.Rational:
    p, q = text.split("/")
    return sp.Rational(int(p), int(q))


def format_rational(x) -> str:
    x = sp.Rational(x)
    return f"{x.p}/{x.q}"


def _rational_matrix(rows: List[List[str]], cols: int, position: str) -> Matrix:
    for i, row in enumerate(rows):
        if len(row) != cols:
            raise DocumentError(f"row of length {len(row)}, expected {cols}", f"{position}/{i}")
    return as_matrix(([parse_rational(x) for x in row] for row in rows), cols)


def _format_rows(m: Matrix) -> List[List[str]]:
    return [[format_rational(x) for x in m.row(i)] for i in range(m.rows)]


# Parsing


def _finset(id: str, elements: List[Any], position: str) -> FinSet:
    atoms = [to_atom(x, f"{position}/{i}") for i, x in enumerate(elements)]
    seen = set()
    for i, x in enumerate(atoms):
        if x in seen:
            raise DocumentError(f"duplicate element {x!r}", f"{position}/{i}")
        seen.add(x)
    return FinSet(id, atoms)


def _member(s: FinSet, value: Any, position: str) -> Atom:
    atom = to_atom(value, position)
    if atom not in s:
        raise DocumentError(f"{atom!r} is not an element of {s.id!r}", position)
    return atom


def _pairs(items: List[List[Any]], src: FinSet, dst: FinSet, position: str) -> List[Tuple[Atom, Atom]]:
    pairs = []
    for i, item in enumerate(items):
        if len(item) != 2:
            raise DocumentError(f"expected a pair, got {len(item)} entries", f"{position}/{i}")
        pairs.append((_member(src, item[0], f"{position}/{i}/0"), _member(dst, item[1], f"{position}/{i}/1")))
    return pairs


def _table(items: List[List[Any]], dom: FinSet, cod: FinSet, position: str) -> Dict[Atom, Atom]:
    table: Dict[Atom, Atom] = {}
    for i, (k, v) in enumerate(_pairs(items, dom, cod, position)):
        if table.get(k, v) != v:
            raise DocumentError(f"{k!r} has two values", f"{position}/{i}")
        table[k] = v
    return table


def _wrap(position: str, build: Callable[[], Any]) -> Any:
    """Run a domain constructor, reporting its errors at `position`."""
    try:
        return build()
    except DocumentError:
        raise
    except CanrelError as e:
        raise DocumentError(str(e), position) from e


def groupoid_from_model(
    m: GroupoidDocument,
    position: str = "",
    arrows: Optional[FinSet] = None,
    objects: Optional[FinSet] = None,
) -> FinGroupoid:
    if m.arrows is not None:
        arrows = _finset(f"{m.id}1", m.arrows, f"{position}/arrows")
    if m.objects is not None:
        objects = _finset(f"{m.id}0", m.objects, f"{position}/objects")
    if arrows is None or objects is None:
        missing = "arrows" if arrows is None else "objects"
        raise DocumentError(f"groupoid {m.id!r} needs {missing}", f"{position}/{missing}")
    comp = {}
    for i, item in enumerate(m.comp):
        at = f"{position}/comp/{i}"
        if len(item) != 3:
            raise DocumentError(f"expected a triple, got {len(item)} entries", at)
        g, h, gh = (_member(arrows, x, f"{at}/{j}") for j, x in enumerate(item))
        if comp.get((g, h), gh) != gh:
            raise DocumentError(f"product of {g!r} and {h!r} is multi-valued", at)
        comp[(g, h)] = gh
    return _wrap(
        position or "/",
        lambda: FinGroupoid(
            arrows=arrows,
            objects=objects,
            source=_table(m.source, arrows, objects, f"{position}/source"),
            target=_table(m.target, arrows, objects, f"{position}/target"),
            unit=_table(m.unit, objects, arrows, f"{position}/unit"),
            comp=comp,
            inv=_table(m.inv, arrows, arrows, f"{position}/inv"),
            id=m.id,
        ),
    )


def double_from_model(m: DoubleDocument) -> FinDoubleGroupoid:
    squares = _finset(m.id, m.squares, "/squares")
    side_h = groupoid_from_model(m.side_h, "/sideH")
    side_v = groupoid_from_model(m.side_v, "/sideV")
    hstruct = groupoid_from_model(m.hstruct, "/hstruct", squares, side_h.arrows)
    vstruct = groupoid_from_model(m.vstruct, "/vstruct", squares, side_v.arrows)
    return _wrap("/", lambda: FinDoubleGroupoid(squares, side_h, side_v, hstruct, vstruct, id=m.id))


def hopfoid_from_model(m: HopfoidDocument) -> Hopfoid:
    S = _finset(f"{m.id}.S", m.carrier, "/carrier")
    C = _finset(f"{m.id}.C", m.base, "/base")
    SS, CC, pt = product(S, S), product(C, C), point()

    def rel(name: str, alias: str, src: FinSet, dst: FinSet) -> Rel:
        return Rel(src, dst, _pairs(getattr(m, name), src, dst, f"/{alias}"), name=alias)

    return _wrap(
        "/",
        lambda: Hopfoid(
            carrier=S,
            base=C,
            target=rel("target", "target", S, C),
            source=rel("source", "source", S, C),
            unit=rel("unit", "unit", C, S),
            product=rel("product", "product", SS, S),
            coproduct=rel("coproduct", "coproduct", S, SS),
            antipode=rel("antipode", "antipode", S, S),
            carrier_counit=rel("carrier_counit", "carrierCounit", S, pt),
            carrier_star=rel("carrier_star", "carrierStar", S, S),
            base_coproduct=rel("base_coproduct", "baseCoproduct", C, CC),
            base_counit=rel("base_counit", "baseCounit", C, pt),
            base_star=rel("base_star", "baseStar", C, C),
            id=m.id,
        ),
    )


def _form(rows: List[List[str]], position: str) -> SympSpace:
    matrix = _rational_matrix(rows, len(rows), position)
    return _wrap(position, lambda: SympSpace(matrix))


def matrix_from_model(m: MatrixDocument, position: str = "") -> Union[LinCanRel, Subspace, Matrix]:
    if (m.src is None) != (m.dst is None):
        raise DocumentError("a relation needs both src and dst forms", f"{position}/src")
    if m.src is not None:
        src, dst = _form(m.src, f"{position}/src"), _form(m.dst, f"{position}/dst")
        rows = _rational_matrix(m.rows, src.dim + dst.dim, f"{position}/rows")
        return _wrap(position or "/", lambda: LinCanRel(src, dst, Subspace(direct_sum(dual(src), dst), rows)))
    if m.form is not None:
        ambient = _form(m.form, f"{position}/form")
        rows = _rational_matrix(m.rows, ambient.dim, f"{position}/rows")
        return _wrap(position or "/", lambda: Subspace(ambient, rows))
    if m.cols is None and not m.rows:
        raise DocumentError("an empty matrix needs cols", f"{position}/cols")
    cols = m.cols if m.cols is not None else len(m.rows[0])
    return _rational_matrix(m.rows, cols, f"{position}/rows")


def chain_from_model(m: ChainDocument) -> CorrChain:
    legs = []
    for i, leg in enumerate(m.legs):
        value = matrix_from_model(leg, f"/legs/{i}")
        if not isinstance(value, LinCanRel):
            raise DocumentError("chain legs need src and dst forms", f"/legs/{i}")
        legs.append(value)
    return _wrap("/legs", lambda: CorrChain(tuple(legs)))


def report_from_model(m: ReportDocument) -> Report:
    checks = [
        _wrap(f"/checks/{i}", lambda c=c: Check(c.name, c.passed, c.witness, c.detail))
        for i, c in enumerate(m.checks)
    ]
    return Report(m.subject, checks, list(m.notes))


def simplicial_from_model(m: SimplicialDocument) -> SimplicialRel:
    levels = [_finset(f"P{n}", elems, f"/levels/{n}") for n, elems in enumerate(m.levels)]

    def maps(tables, step: int, name: str) -> List[List[Rel]]:
        out = []
        for n, row in enumerate(tables):
            rels = []
            for i, pairs in enumerate(row):
                if not 0 <= n + step < len(levels):
                    raise DocumentError(f"{name} at level {n} leaves the levels", f"/{name}/{n}")
                src, dst = levels[n], levels[n + step]
                rels.append(Rel(src, dst, _pairs(pairs, src, dst, f"/{name}/{n}/{i}")))
            out.append(rels)
        return out

    faces = maps(m.faces, -1, "faces")
    degeneracies = maps(m.degeneracies, 1, "degeneracies")
    return _wrap("/", lambda: SimplicialRel(levels, faces, degeneracies))


def linear_from_model(m: LinearDocument) -> LinearResult:
    results = {name: matrix_from_model(doc, f"/results/{name}") for name, doc in m.results.items()}
    return LinearResult(op=m.op, results=results, flags=dict(m.flags))


def from_model(model: Any) -> Any:
    """The domain value described by a validated document model."""
    if isinstance(model, SetDocument):
        return _finset(model.id, model.elements, "/elements")
    if isinstance(model, RelationDocument):
        src = _finset("src", model.src, "/src")
        dst = _finset("dst", model.dst, "/dst")
        return Rel(src, dst, _pairs(model.pairs, src, dst, "/pairs"), name=model.name)
    if isinstance(model, GroupoidDocument):
        return groupoid_from_model(model)
    if isinstance(model, DoubleDocument):
        return double_from_model(model)
    if isinstance(model, HopfoidDocument):
        return hopfoid_from_model(model)
    if isinstance(model, MatrixDocument):
        return matrix_from_model(model)
    if isinstance(model, ChainDocument):
        return chain_from_model(model)
    if isinstance(model, ReportDocument):
        return report_from_model(model)
    if isinstance(model, SimplicialDocument):
        return simplicial_from_model(model)
    return linear_from_model(model)


# Locating pointers in document text

_WHITESPACE = re.compile(r"[ \t\n\r]*")
_DECODER = json.JSONDecoder()


def _skip(text: str, i: int) -> int:
    return _WHITESPACE.match(text, i).end()


def _member_start(text: str, i: int, part: str) -> Optional[int]:
    """Start of member `part` of the container opening at `i`, if present."""
    is_object = text[i] == "{"
    close = "}" if is_object else "]"
    i = _skip(text, i + 1)
    index = 0
    while i < len(text) and text[i] != close:
        if is_object:
            key, i = scanstring(text, i + 1)
            i = _skip(text, i)
            if text[i] != ":":
                return None
            i = _skip(text, i + 1)
            found = key == part
        else:
            found = str(index) == part
        if found:
            return i
        _, i = _DECODER.raw_decode(text, i)
        i = _skip(text, i)
        if text[i] == ",":
            i = _skip(text, i + 1)
        index += 1
    return None


def locate(text: Union[str, bytes], pointer: Optional[str]) -> Optional[Tuple[int, int]]:
    """
    Line and column (both from 1) where the value at `pointer` starts,
    or None when the text is not JSON or has no such value.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="replace")
    parts = [p.replace("~1", "/").replace("~0", "~") for p in (pointer or "/").split("/")[1:] if p]
    i = _skip(text, 0)
    try:
        for part in parts:
            if i >= len(text) or text[i] not in "{[":
                return None
            i = _member_start(text, i, part)
            if i is None:
                return None
    except (ValueError, IndexError):
        return None
    # the decode error computes line and column the way json reports them
    at = json.JSONDecodeError("", text, i)
    return at.lineno, at.colno


def _located(e: DocumentError, text: Union[str, bytes]) -> DocumentError:
    where = locate(text, e.position) if e.position not in (None, "", "/") else None
    if where is None:
        return e
    return DocumentError(e.reason, e.position, *where)


def _pointer(loc: Iterable[Any]) -> str:
    return "/" + "/".join(str(part) for part in loc)


def parse_model(text: Union[str, bytes]) -> Any:
    """
    Validate document text against the schemas.

    Raises:
        DocumentError: If the text is not JSON or does not match a schema;
            the position is a JSON pointer to the offending value, with its
            line and column when the text is well-formed JSON
    """
    try:
        return DOCUMENT_ADAPTER.validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        loc = list(first["loc"])
        # pydantic prefixes the location with the union tag
        if loc and loc[0] in KINDS:
            loc = loc[1:]
        raise _located(DocumentError(first["msg"], _pointer(loc)), text) from None


def parse_text(text: Union[str, bytes]) -> Any:
    """
    Parse and convert document text.

    Raises:
        DocumentError: As for parse_model, and for references to elements a
            document does not declare, located the same way
    """
    model = parse_model(text)
    try:
        return from_model(model)
    except DocumentError as e:
        located = _located(e, text)
        if located is e:
            raise
        raise located from e


def parse(path: Union[str, Path]) -> Any:
    """Read and convert a document file; I/O errors propagate."""
    text = Path(path).read_text(encoding="utf-8")
    value = parse_text(text)
    logger.debug("parsed %s from %s", type(value).__name__, path)
    return value


# Serialization


def _sorted_atoms(elements: Iterable[Atom]) -> List[Any]:
    return [jsonable(x) for x in sorted(elements, key=atom_key)]


def _sorted_pairs(pairs: Iterable[Tuple[Atom, ...]]) -> List[Any]:
    return [jsonable(list(p)) for p in sorted(pairs, key=lambda p: tuple(atom_key(x) for x in p))]


def groupoid_payload(g: FinGroupoid, with_sets: bool = True) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"kind": "groupoid", "id": g.id}
    if with_sets:
        payload["arrows"] = _sorted_atoms(g.arrows)
        payload["objects"] = _sorted_atoms(g.objects)
    payload.update(
        {
            "source": _sorted_pairs(g.source.items()),
            "target": _sorted_pairs(g.target.items()),
            "unit": _sorted_pairs(g.unit.items()),
            "comp": _sorted_pairs((a, b, ab) for (a, b), ab in g.comp.items()),
            "inv": _sorted_pairs(g.inv.items()),
        }
    )
    return payload


def _matrix_payload(value: Union[LinCanRel, Subspace, Matrix]) -> Dict[str, Any]:
    if isinstance(value, LinCanRel):
        return {
            "kind": "matrix",
            "rows": _format_rows(value.graph.basis),
            "src": _format_rows(value.src.form),
            "dst": _format_rows(value.dst.form),
        }
    if isinstance(value, Subspace):
        return {
            "kind": "matrix",
            "rows": _format_rows(value.basis),
            "form": _format_rows(value.ambient.form),
        }
    return {"kind": "matrix", "rows": _format_rows(value), "cols": value.cols}


def to_payload(value: Any) -> Dict[str, Any]:
    if isinstance(value, Report):
        return value.as_dict()
    if isinstance(value, FinGroupoid):
        return groupoid_payload(value)
    if isinstance(value, FinDoubleGroupoid):
        return {
            "kind": "double",
            "id": value.id,
            "squares": _sorted_atoms(value.squares),
            "sideH": groupoid_payload(value.side_h),
            "sideV": groupoid_payload(value.side_v),
            "hstruct": groupoid_payload(value.hstruct, with_sets=False),
            "vstruct": groupoid_payload(value.vstruct, with_sets=False),
        }
    if isinstance(value, Hopfoid):
        payload = {
            "kind": "hopfoid",
            "id": value.id,
            "carrier": _sorted_atoms(value.carrier),
            "base": _sorted_atoms(value.base),
        }
        payload.update({name: _sorted_pairs(r.pairs) for name, r in value.relations().items()})
        return payload
    if isinstance(value, Rel):
        return {
            "kind": "relation",
            "name": value.name,
            "src": _sorted_atoms(value.src),
            "dst": _sorted_atoms(value.dst),
            "pairs": _sorted_pairs(value.pairs),
        }
    if isinstance(value, FinSet):
        return {"kind": "set", "id": value.id, "elements": _sorted_atoms(value)}
    if isinstance(value, SimplicialRel):
        return {
            "kind": "simplicial",
            "levels": [_sorted_atoms(level) for level in value.levels],
            "faces": [[_sorted_pairs(d.pairs) for d in row] for row in value.faces],
            "degeneracies": [[_sorted_pairs(s.pairs) for s in row] for row in value.degeneracies],
        }
    if isinstance(value, CorrChain):
        return {"kind": "chain", "legs": [_matrix_payload(leg) for leg in value.legs]}
    if isinstance(value, LinearResult):
        return {
            "kind": "linear",
            "op": value.op,
            "results": {name: _matrix_payload(v) for name, v in value.results.items()},
            "flags": jsonable(value.flags),
        }
    if isinstance(value, (LinCanRel, Subspace, sp.MatrixBase)):
        return _matrix_payload(value)
    raise DocumentError(f"no document kind for {type(value).__name__}")


def kind_of(value: Any) -> str:
    """The document kind `value` serializes to."""
    return to_payload(value)["kind"]


def serialize(value: Any) -> bytes:
    """Canonical UTF-8 JSON text with a trailing newline."""
    return (json.dumps(to_payload(value), indent=2, ensure_ascii=False) + "\n").encode("utf-8")
