import pytest
import sympy as sp

from canrel.core import Settings
from canrel.core.errors import BoundsError, DimensionError, NotCoisotropicError, StructureError
from canrel.dbl.double import validate_double
from canrel.dbl.hopfoid import to_hopfoid
from canrel.grpd.groupoid import validate
from canrel.grpd.iso import find_isomorphism
from canrel.relcat.relations import Rel
from canrel.relcat.sets import FinSet
from canrel.services import ConstructionService, EnumerationService, LinearService, ValidationService
from canrel.services.enumeration_service import EnumerationCheck, enumerate_doubles, enumerate_groupoids, parse_checks
from canrel.symplin.chains import CorrChain
from canrel.symplin.cotangent import cotangent_lift
from canrel.symplin.relations import lin_identity
from canrel.symplin.spaces import Matrix, span, standard_space, whole, zero

Q2 = standard_space(1)
Q4 = standard_space(2)


@pytest.fixture
def settings():
    return Settings(max_arrows=2, max_squares=2, workers=1, default_depth=2)


# Validation


def test_validation_dispatches_on_kind(settings, z2_groupoid, dinertia_z2):
    service = ValidationService(settings)
    assert service.validate(z2_groupoid).subject.startswith("groupoid")
    assert service.validate(z2_groupoid).passed
    assert service.validate(dinertia_z2, kind="double").passed
    assert service.validate(to_hopfoid(dinertia_z2), kind="hopfoid").passed


def test_validation_rejects_the_wrong_kind(settings, z2_groupoid):
    with pytest.raises(StructureError):
        ValidationService(settings).validate(z2_groupoid, kind="double")


def test_flag_notes(settings):
    service = ValidationService(settings)
    report = service.validate(span(Q2, [[1, 0]]))
    assert report.passed and "lagrangian: true" in report.notes
    rel = Rel(FinSet("A", (1, 2)), FinSet("B", ("a",)), [(1, "a"), (2, "a")])
    assert "surjective: true" in service.validate(rel).notes
    assert service.validate(FinSet("A", (1,))).get("elements-distinct").passed


def test_linear_relation_report(settings):
    report = ValidationService(settings).validate(lin_identity(Q4))
    assert [c.name for c in report.checks] == ["lagrangian", "domain-coisotropic", "image-coisotropic"]
    assert report.passed


def test_chain_report(settings):
    chain = CorrChain((lin_identity(Q2), lin_identity(Q2)))
    report = ValidationService(settings).validate(chain)
    assert report.passed
    assert "junction 0 strongly_transversal: true" in report.notes


# Construction


def test_construction_ops(settings, z2_groupoid, dinertia_z2, dmain_z2):
    service = ConstructionService(settings)
    assert find_isomorphism(service.construct(dinertia_z2, "core"), z2_groupoid) is not None
    assert len(service.construct(z2_groupoid, "nerve").levels) == 3
    assert len(service.construct(z2_groupoid, "nerve", depth=1).levels) == 2
    assert len(service.construct(z2_groupoid, "example", kind="dinertia").squares) == 4
    assert service.construct(dinertia_z2, "transpose").id == f"{dinertia_z2.id}^t"
    assert validate(service.construct(dinertia_z2, "induced")).passed
    assert len(service.construct(dinertia_z2, "orbits")) == 2
    assert validate_double(service.construct(to_hopfoid(dmain_z2), "reconstruct")).passed


def test_construction_rejects_mismatched_input(settings, pair2):
    service = ConstructionService(settings)
    with pytest.raises(StructureError) as e:
        service.construct(pair2, "core")
    assert "FinDoubleGroupoid" in str(e.value)
    with pytest.raises(ValueError) as e:
        service.construct(pair2, "fold")
    assert "Supported" in str(e.value)


# Linear


def test_linear_compose(settings):
    service = LinearService(settings)
    result = service.run("compose", [lin_identity(Q2), lin_identity(Q2)])
    assert result.results["result"] == lin_identity(Q2)
    assert result.flags == {"transversal": True, "strongly_transversal": True}
    three = service.run("compose", [lin_identity(Q2)] * 3)
    assert len(three.flags["junctions"]) == 2


def test_linear_reduce(settings):
    service = LinearService(settings)
    result = service.run("reduce", [span(Q4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])])
    assert result.flags == {"reduction": True}
    assert result.results["reduction"].dst.dim == 2
    assert service.run("reduce", [whole(Q2)]).flags["reduction"]
    with pytest.raises(NotCoisotropicError):
        service.run("reduce", [zero(Q2)])


def test_linear_lift_flags(settings):
    result = LinearService(settings).run("lift", [Matrix([[1, 0]])])
    assert result.flags == {"surjective": True, "injective": False, "reduction": True, "coreduction": False}
    assert result.results["lift"] == cotangent_lift(Matrix([[1, 0]]))


def test_linear_factor_and_two_term(settings):
    service = LinearService(settings)
    assert service.run("factor", [lin_identity(Q2)]).flags == {"recomposes": True}
    chain = CorrChain((cotangent_lift(Matrix([[2]])), cotangent_lift(Matrix([[1], [1]]))))
    flags = service.run("two-term", [chain]).flags
    assert flags == {"recomposes": True, "coreduction": True, "reduction": True}


def test_linear_dom_im_and_induced_iso(settings):
    service = LinearService(settings)
    assert set(service.run("dom-im", [lin_identity(Q2)]).results) == {"domain", "image"}
    assert service.run("induced-iso", [lin_identity(Q2)]).results["matrix"] == Matrix(sp.eye(2))


def test_linear_input_errors():
    service = LinearService(Settings(max_ambient_dim=2))
    with pytest.raises(DimensionError):
        service.run("compose", [lin_identity(Q4), lin_identity(Q4)])
    with pytest.raises(StructureError):
        service.run("reduce", [lin_identity(Q2)])
    with pytest.raises(StructureError):
        service.run("reduce", [])
    with pytest.raises(ValueError) as e:
        service.run("integrate", [])
    assert "Supported" in str(e.value)


# Enumeration


def test_groupoids_up_to_two_arrows():
    assert sorted(len(g.arrows) for g in enumerate_groupoids(2)) == [1, 2, 2]
    assert len(enumerate_groupoids(4)) > len(enumerate_groupoids(2))


def test_parse_checks():
    assert EnumerationCheck.SIMPLICIAL in parse_checks(None)
    assert EnumerationCheck.NERVE not in parse_checks(None)
    assert parse_checks(["groupoid", "groupoid"]) == parse_checks(["groupoid"])
    with pytest.raises(ValueError) as e:
        parse_checks(["speed"])
    assert "Supported" in str(e.value)


def test_doubles_up_to_two_squares():
    doubles = enumerate_doubles(2, 2)
    assert sorted(len(d.squares) for d in doubles) == [1, 2, 2, 2, 2]
    assert all(validate_double(d).passed for d in doubles)


def test_enumeration_bounds(settings):
    service = EnumerationService(settings)
    with pytest.raises(BoundsError):
        service.run(max_arrows=9)
    with pytest.raises(BoundsError):
        service.run(max_squares=13)
    with pytest.raises(BoundsError):
        service.run(max_arrows=-1)


def test_groupoid_suite(settings):
    report = EnumerationService(settings).run(checks=["groupoid", "zakrzewski", "nerve"])
    assert report.passed
    assert len(report.checks) == 9
    assert report.notes[-1] == "3 groupoids, 0 doubles"


def test_injected_counterexample_is_reported(settings):
    report = EnumerationService(settings).run(checks=["groupoid"], inject_bad=True)
    assert not report.passed
    (bad,) = report.failures
    assert bad.name == "groupoid:bad(Z2)"
    assert "inverse-laws" in bad.witness


def test_small_double_suite(settings):
    report = EnumerationService(settings).run()
    assert report.passed, [c.name for c in report.failures]
    assert any(c.name.startswith("hopfoid:") for c in report.checks)
    assert sum(c.name.startswith("simplicial:") for c in report.checks) == 5
