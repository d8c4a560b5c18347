import json

import pytest
from click.testing import CliRunner

from cli.canrel_cli import cli
from canrel.grpd.groupoid import FinGroupoid
from canrel.models import serialize, parse
from canrel.symplin.spaces import span, standard_space


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(cli, list(args), catch_exceptions=False)


def write_example(runner, tmp_path, kind, group="Z2", name=None):
    path = tmp_path / (name or f"{kind}-{group}.json")
    result = invoke(runner, "example", "-k", kind, "-g", group, "-o", str(path))
    assert result.exit_code == 0
    return path


def test_version(runner):
    result = invoke(runner, "--version")
    assert result.exit_code == 0
    assert "1.0.0" in result.output


@pytest.mark.parametrize("kind", ["group", "pair", "trivial", "action", "dmain", "dinertia", "crossed", "product"])
def test_examples_validate(runner, tmp_path, kind):
    path = write_example(runner, tmp_path, kind)
    report = tmp_path / "report.json"
    result = invoke(runner, "validate", "-i", str(path), "-o", str(report))
    assert result.exit_code == 0
    assert json.loads(report.read_text())["summary"]["failed"] == 0


def test_output_is_byte_stable(runner, tmp_path):
    first = write_example(runner, tmp_path, "dinertia", "S3", "a.json")
    second = write_example(runner, tmp_path, "dinertia", "S3", "b.json")
    assert first.read_bytes() == second.read_bytes()


def test_failed_check_exits_one(runner, tmp_path, z2_groupoid):
    comp = dict(z2_groupoid.comp)
    comp[("1", "1")] = "1"
    bad = FinGroupoid(
        z2_groupoid.arrows, z2_groupoid.objects, z2_groupoid.source, z2_groupoid.target,
        z2_groupoid.unit, comp, z2_groupoid.inv, id="bad",
    )
    path = tmp_path / "bad.json"
    path.write_bytes(serialize(bad))
    report = tmp_path / "report.json"
    result = invoke(runner, "validate", "-i", str(path), "-o", str(report))
    assert result.exit_code == 1
    failed = [c["name"] for c in json.loads(report.read_text())["checks"] if not c["passed"]]
    assert "inverse-laws" in failed


def test_errors_exit_two(runner, tmp_path):
    assert invoke(runner, "validate", "-i", str(tmp_path / "missing.json")).exit_code == 2
    broken = tmp_path / "broken.json"
    broken.write_text('{"kind": "set", "elements": ["a", "a"]}')
    assert invoke(runner, "validate", "-i", str(broken)).exit_code == 2
    group = write_example(runner, tmp_path, "group")
    assert invoke(runner, "validate", "-i", str(group), "-k", "double").exit_code == 2


def test_construct_core(runner, tmp_path):
    double = write_example(runner, tmp_path, "dinertia", "S3")
    out = tmp_path / "core.json"
    result = invoke(runner, "construct", "-i", str(double), "--op", "core", "-o", str(out))
    assert result.exit_code == 0
    assert len(parse(out).arrows) == 6


def test_construct_errors(runner, tmp_path):
    group = write_example(runner, tmp_path, "group")
    assert invoke(runner, "construct", "-i", str(group), "--op", "core").exit_code == 2
    assert invoke(runner, "construct", "-i", str(group), "--op", "fold").exit_code == 2


def test_construct_hopfoid_then_reconstruct(runner, tmp_path):
    double = write_example(runner, tmp_path, "dmain")
    hopfoid = tmp_path / "hopfoid.json"
    rebuilt = tmp_path / "rebuilt.json"
    assert invoke(runner, "construct", "-i", str(double), "--op", "hopfoid", "-o", str(hopfoid)).exit_code == 0
    assert invoke(runner, "validate", "-i", str(hopfoid), "-k", "hopfoid").exit_code == 0
    assert invoke(runner, "construct", "-i", str(hopfoid), "--op", "reconstruct", "-o", str(rebuilt)).exit_code == 0
    assert invoke(runner, "validate", "-i", str(rebuilt), "-k", "double").exit_code == 0


def test_linear_reduce(runner, tmp_path):
    path = tmp_path / "c.json"
    path.write_bytes(serialize(span(standard_space(2), [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])))
    out = tmp_path / "reduced.json"
    result = invoke(runner, "linear", "--op", "reduce", "-i", str(path), "-o", str(out))
    assert result.exit_code == 0
    payload = json.loads(out.read_text())
    assert payload["kind"] == "linear" and payload["flags"] == {"reduction": True}


def test_linear_reduce_rejects_isotropic_input(runner, tmp_path):
    path = tmp_path / "line.json"
    path.write_bytes(serialize(span(standard_space(2), [[1, 0, 0, 0]])))
    assert invoke(runner, "linear", "--op", "reduce", "-i", str(path)).exit_code == 2


def test_enumerate(runner, tmp_path):
    out = tmp_path / "enumeration.json"
    args = ["enumerate", "--max-arrows", "2", "--max-squares", "2", "-c", "groupoid,zakrzewski", "-o", str(out)]
    assert invoke(runner, *args).exit_code == 0
    assert invoke(runner, *args, "--inject-bad").exit_code == 1
    assert invoke(runner, "enumerate", "--max-arrows", "9").exit_code == 2
    assert invoke(runner, "enumerate", "--max-arrows", "2", "-c", "speed").exit_code == 2


def test_enumerate_help_names_the_default_checks(runner):
    result = invoke(runner, "enumerate", "--help")
    assert result.exit_code == 0
    assert "all but nerve" in result.output


def test_show(runner, tmp_path):
    path = write_example(runner, tmp_path, "pair")
    result = invoke(runner, "show", "-i", str(path))
    assert result.exit_code == 0
    assert "arrows" in result.output
