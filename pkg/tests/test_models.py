import json

import pytest
import sympy as sp

from canrel.core.errors import DocumentError
from canrel.core.report import Report
from canrel.dbl.hopfoid import check_hopfoid, to_hopfoid
from canrel.grpd.nerve import nerve
from canrel.models import check_rational, kind_of, parse, parse_text, serialize
from canrel.relcat.relations import Rel
from canrel.relcat.sets import FinSet
from canrel.symplin.relations import lin_identity
from canrel.symplin.spaces import Matrix, span, standard_space


def doc(**fields):
    return json.dumps(fields)


# Rationals


@pytest.mark.parametrize("text", ["0/1", "-3/2", "7/1"])
def test_reduced_rationals_are_accepted(text):
    assert check_rational(text) == text


@pytest.mark.parametrize("text", ["2/4", "1/0", "-0/1", "1.5", "3"])
def test_other_rationals_are_rejected(text):
    with pytest.raises(ValueError):
        check_rational(text)


def test_unreduced_matrix_entry_is_located():
    with pytest.raises(DocumentError) as e:
        parse_text(doc(kind="matrix", rows=[["2/4"]]))
    assert e.value.position == "/rows"
    assert "lowest terms" in str(e.value)


# Parsing


def test_set_document():
    s = parse_text(doc(kind="set", id="A", elements=[1, "a", [1, 2]]))
    assert s == FinSet("A", (1, "a", (1, 2)))


def test_duplicate_element_is_located():
    with pytest.raises(DocumentError) as e:
        parse_text(doc(kind="set", elements=["a", "a"]))
    assert e.value.position == "/elements/1"


def test_unknown_field_is_rejected():
    with pytest.raises(DocumentError) as e:
        parse_text(doc(kind="set", elements=[], colour="red"))
    assert e.value.position == "/colour"


def test_unknown_kind_is_rejected():
    with pytest.raises(DocumentError):
        parse_text(doc(kind="cube"))


def test_invalid_json_is_a_document_error():
    with pytest.raises(DocumentError):
        parse_text("{not json")


def test_relation_pair_outside_its_sets():
    with pytest.raises(DocumentError) as e:
        parse_text(doc(kind="relation", src=[1], dst=["a"], pairs=[[1, "b"]]))
    assert e.value.position == "/pairs/0/1"


def test_missing_element_reference_has_line_and_column():
    text = json.dumps({"kind": "relation", "src": [1], "dst": ["a"], "pairs": [[1, "b"]]}, indent=2)
    with pytest.raises(DocumentError) as e:
        parse_text(text)
    assert e.value.position == "/pairs/0/1"
    assert (e.value.line, e.value.column) == (12, 7)
    assert "line 12 column 7" in str(e.value)


def test_schema_error_has_line_and_column():
    text = doc(kind="set", elements=[], colour="red")
    with pytest.raises(DocumentError) as e:
        parse_text(text)
    assert (e.value.line, e.value.column) == (1, text.index('"red"') + 1)


def test_double_side_reference_is_located(dmain_z2):
    payload = json.loads(serialize(dmain_z2))
    payload["hstruct"]["source"][0][1] = "nowhere"
    text = json.dumps(payload, indent=2)
    with pytest.raises(DocumentError) as e:
        parse_text(text)
    assert e.value.position == "/hstruct/source/0/1"
    line = text.splitlines()[e.value.line - 1]
    assert line[e.value.column - 1 :].startswith('"nowhere"')


def test_groupoid_with_a_missing_table_entry(z2_groupoid):
    payload = json.loads(serialize(z2_groupoid))
    payload["source"] = payload["source"][:1]
    with pytest.raises(DocumentError) as e:
        parse_text(json.dumps(payload))
    assert "source undefined" in str(e.value)


def test_top_level_groupoid_needs_its_sets(z2_groupoid):
    payload = json.loads(serialize(z2_groupoid))
    del payload["objects"]
    with pytest.raises(DocumentError) as e:
        parse_text(json.dumps(payload))
    assert e.value.position == "/objects"
    assert e.value.line is None


def test_parse_reads_files(tmp_path, pair2):
    path = tmp_path / "pair.json"
    path.write_bytes(serialize(pair2))
    assert parse(path) == pair2


# Serialization


def test_output_does_not_depend_on_order():
    one = parse_text(doc(kind="relation", src=[2, 1], dst=["b", "a"], pairs=[[2, "a"], [1, "b"]]))
    two = parse_text(doc(kind="relation", src=[1, 2], dst=["a", "b"], pairs=[[1, "b"], [2, "a"]]))
    assert serialize(one) == serialize(two)
    assert serialize(one).endswith(b"\n")


def test_structures_survive_a_document(pair2, dinertia_pair2, dinertia_z2):
    assert parse_text(serialize(pair2)) == pair2
    assert parse_text(serialize(dinertia_pair2)) == dinertia_pair2
    h = parse_text(serialize(to_hopfoid(dinertia_z2)))
    assert check_hopfoid(h).passed


def test_linear_documents():
    Q2 = standard_space(1)
    l = lin_identity(Q2)
    assert parse_text(serialize(l)) == l
    line = span(Q2, [[1, 0]])
    assert parse_text(serialize(line)) == line
    m = Matrix([[sp.Rational(1, 2), -1]])
    assert parse_text(serialize(m)) == m
    assert json.loads(serialize(m))["rows"] == [["1/2", "-1/1"]]


def test_empty_matrix_keeps_its_columns():
    m = Matrix(sp.zeros(0, 3))
    assert parse_text(serialize(m)).shape == (0, 3)


def test_report_document():
    report = Report("demo")
    report.add("ok", True)
    report.add("broken", False, "x", detail="why")
    payload = json.loads(serialize(report))
    assert payload["summary"] == {"total": 2, "passed": 1, "failed": 1}
    assert parse_text(serialize(report)) == report


def test_simplicial_document(z2_groupoid):
    x = nerve(z2_groupoid, 2)
    back = parse_text(serialize(x))
    assert [len(level) for level in back.levels] == [1, 2, 4]
    assert serialize(back) == serialize(x)


def test_kind_of():
    assert kind_of(FinSet("A", (1,))) == "set"
    assert kind_of(Rel(FinSet("A", (1,)), FinSet("B", (2,)), [])) == "relation"
    assert kind_of(Report("r")) == "report"
    assert kind_of(lin_identity(standard_space(1))) == "matrix"
    with pytest.raises(DocumentError):
        kind_of(object())
