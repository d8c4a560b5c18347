import pytest
from hypothesis import given, strategies as st

from canrel.core.errors import StructureError
from canrel.grpd.actions import target_action
from canrel.grpd.bridge import action_bridge, to_star_monoid
from canrel.grpd.groups import cyclic
from canrel.grpd.nerve import nerve, nerve_inversions
from canrel.grpd.standard import group_groupoid
from canrel.relcat.checks import (
    check_action,
    check_comonoid,
    check_comonoid_morphism,
    check_hopf,
    check_monoid,
    check_simplicial,
    check_star,
    check_star_simplicial,
    diagonal_comonoid,
    star_flags,
)
from canrel.relcat.relations import (
    Rel,
    chain,
    classify,
    compose,
    compose_sharp,
    cross,
    domain,
    empty,
    equal,
    full,
    graph,
    identity,
    image,
    transpose,
)
from canrel.relcat.sets import FinSet, point, product
from canrel.relcat.structures import RelComonoid, RelMonoid, SimplicialRel, StarStructure, monoid_transpose


@st.composite
def relation_chain(draw, count):
    sizes = [draw(st.integers(0, 3)) for _ in range(count + 1)]
    sets = [FinSet(f"A{i}", range(n)) for i, n in enumerate(sizes)]
    rels = []
    for a, b in zip(sets, sets[1:]):
        cells = [(x, y) for x in a for y in b]
        mask = draw(st.lists(st.booleans(), min_size=len(cells), max_size=len(cells)))
        rels.append(Rel(a, b, [p for p, keep in zip(cells, mask) if keep]))
    return rels


A = FinSet("A", (1, 2))
B = FinSet("B", ("a", "b"))
X = FinSet("X", ("x", "y"))


# Composition


def test_compose_collects_all_witnesses():
    r = Rel(FinSet("S", (1,)), FinSet("T", ("a",)), [(1, "a")])
    s = Rel(FinSet("T", ("a",)), X, [("a", "x"), ("a", "y")])
    assert compose(r, s).pairs == {(1, "x"), (1, "y")}


def test_compose_with_identity_and_empty():
    r = Rel(A, B, [(1, "a"), (2, "a"), (2, "b")])
    assert equal(compose(identity(A), r), r)[0]
    assert equal(compose(r, identity(B)), r)[0]
    assert compose(empty(A, B), full(B, X)).pairs == frozenset()


def test_compose_endpoint_mismatch_names_both_sets():
    with pytest.raises(StructureError) as e:
        compose(identity(A), identity(X))
    assert "A" in str(e.value) and "X" in str(e.value)


@given(relation_chain(3))
def test_composition_is_associative(rels):
    r, s, t = rels
    assert equal(compose(compose(r, s), t), compose(r, compose(s, t)))[0]


@given(relation_chain(2))
def test_transpose_is_an_antihomomorphism(rels):
    r, s = rels
    assert equal(transpose(compose(r, s)), compose(transpose(s), transpose(r)))[0]
    assert equal(transpose(transpose(r)), r)[0]


@given(relation_chain(1))
def test_surmersion_flags_are_dual(rels):
    (r,) = rels
    flags = classify(r)
    assert flags["surmersion"] == classify(transpose(r))["cosurmersion"]
    if flags["surmersion"]:
        assert flags["surjective"] and flags["coinjective"]


def test_transpose_examples():
    r = Rel(FinSet("S", (1,)), B, [(1, "a"), (1, "b")])
    assert transpose(r).pairs == {("a", 1), ("b", 1)}
    assert equal(transpose(identity(A)), identity(A))[0]
    f = graph(A, A, {1: 2, 2: 1})
    assert equal(transpose(f), f)[0]


def test_cross_counts_and_identities():
    r = Rel(A, B, [(1, "a"), (2, "b"), (2, "a")])
    s = Rel(X, X, [("x", "y")])
    assert len(cross(r, s).pairs) == 3
    assert equal(cross(identity(A), identity(B)), identity(product(A, B)))[0]
    assert cross(empty(A, B), s).pairs == frozenset()


def test_compose_sharp_reports_crowded_pair():
    r = Rel(FinSet("S", (1,)), B, [(1, "a"), (1, "b")])
    s = Rel(B, FinSet("P", ("p",)), [("a", "p"), ("b", "p")])
    composite, sharp, witness = compose_sharp(r, s)
    assert composite.pairs == {(1, "p")}
    assert not sharp
    assert witness == ((1, "p"), ["a", "b"])


def test_domain_and_image():
    r = Rel(A, B, [(1, "b")])
    assert domain(r).elements == (1,)
    assert image(r).elements == ("b",)


# Classification


def test_classify_surjection_onto_point():
    p = FinSet("P", ("p",))
    flags = classify(graph(X, p, {"x": "p", "y": "p"}))
    assert flags["surjective"] and flags["coinjective"] and flags["surmersion"]
    assert not flags["injective"]


def test_classify_identity_sets_every_flag():
    assert all(classify(identity(A)).values())


def test_classify_full_relation():
    flags = classify(full(A, A))
    assert flags["surjective"] and flags["cosurjective"]
    assert not flags["injective"]
    assert not flags["surmersion"]


# Monoids, comonoids, stars


def test_group_monoid_passes(z2_groupoid, pair2):
    for g in (z2_groupoid, pair2):
        monoid, _ = to_star_monoid(g)
        assert check_monoid(monoid).passed


def test_emptied_unit_fails_with_witness(z2_groupoid):
    monoid, _ = to_star_monoid(z2_groupoid)
    broken = RelMonoid(monoid.carrier, monoid.product, empty(point(), monoid.carrier))
    report = check_monoid(broken)
    assert report.get("associativity").passed
    left = report.get("left-unit")
    assert not left.passed and left.witness["only_in"] == "right"


def test_transposed_monoid_is_a_comonoid(z3_groupoid):
    monoid, _ = to_star_monoid(z3_groupoid)
    assert check_comonoid(monoid_transpose(monoid)).passed


def test_diagonal_comonoid_passes():
    assert check_comonoid(diagonal_comonoid(A)).passed


def test_corrupted_coproduct_fails_coassociativity():
    c = diagonal_comonoid(FinSet("C", (1, 2, 3)))
    pairs = set(c.coproduct.pairs)
    pairs.discard((1, (1, 1)))
    pairs.add((1, (1, 2)))
    broken = RelComonoid(c.carrier, Rel(c.carrier, product(c.carrier, c.carrier), pairs), c.counit)
    report = check_comonoid(broken)
    assert not report.passed


def test_functions_are_comonoid_morphisms():
    f = graph(A, B, {1: "a", 2: "a"})
    assert check_comonoid_morphism(f, diagonal_comonoid(A), diagonal_comonoid(B)).passed
    report = check_comonoid_morphism(full(A, B), diagonal_comonoid(A), diagonal_comonoid(B))
    assert not report.get("coproduct").passed
    assert report.get("counit").passed


def test_star_of_z3(z3_groupoid):
    monoid, star = to_star_monoid(z3_groupoid)
    assert star_flags(check_star(star, monoid)) == {"star_ok": True, "strongly_positive": True}
    fake = StarStructure(monoid.carrier, identity(monoid.carrier))
    assert not star_flags(check_star(fake, monoid))["strongly_positive"]


def test_star_on_one_element():
    monoid, star = to_star_monoid(group_groupoid(cyclic(1)))
    assert check_star(star, monoid).passed


def test_star_carrier_mismatch(z2_groupoid, z3_groupoid):
    monoid, _ = to_star_monoid(z2_groupoid)
    _, star = to_star_monoid(z3_groupoid)
    with pytest.raises(StructureError):
        check_star(star, monoid)


# Hopf and actions


def test_group_is_a_hopf_monoid(z2_groupoid, s3_groupoid):
    for g in (z2_groupoid, s3_groupoid):
        monoid, star = to_star_monoid(g)
        assert check_hopf(monoid, diagonal_comonoid(monoid.carrier), star.star).passed


def test_pair_groupoid_antipode_fails(pair2):
    monoid, star = to_star_monoid(pair2)
    report = check_hopf(monoid, diagonal_comonoid(monoid.carrier), star.star)
    assert not report.get("antipode-left").passed
    assert not report.get("antipode-right").passed


def test_one_element_hopf():
    monoid, star = to_star_monoid(group_groupoid(cyclic(1)))
    assert check_hopf(monoid, diagonal_comonoid(monoid.carrier), star.star).passed


def test_target_action_passes(pair2):
    monoid, _ = to_star_monoid(pair2)
    assert check_action(monoid, action_bridge(target_action(pair2))).passed


def test_empty_action_fails_unit(pair2):
    monoid, _ = to_star_monoid(pair2)
    q = pair2.objects
    report = check_action(monoid, empty(product(monoid.carrier, q), q))
    assert not report.get("unit").passed


def test_action_shape_mismatch(pair2):
    monoid, _ = to_star_monoid(pair2)
    with pytest.raises(StructureError):
        check_action(monoid, empty(A, A))


# Simplicial objects


def test_constant_simplicial_object():
    x = SimplicialRel(
        levels=[A, A, A],
        faces=[[], [identity(A)] * 2, [identity(A)] * 3],
        degeneracies=[[identity(A)], [identity(A)] * 2, []],
    )
    assert check_simplicial(x, 2).passed
    assert check_star_simplicial(x, [identity(A)] * 3).passed


def test_nerve_of_z2_passes_to_depth_three(z2_groupoid):
    x = nerve(z2_groupoid, 3)
    assert check_simplicial(x, 3).passed
    assert check_star_simplicial(x, nerve_inversions(z2_groupoid, x)).passed


def test_perturbed_face_is_named(z2_groupoid):
    x = nerve(z2_groupoid, 3)
    faces = [list(row) for row in x.faces]
    faces[2][1] = faces[2][0]
    report = check_simplicial(SimplicialRel(x.levels, faces, x.degeneracies), 3)
    assert any(c.name.startswith("face[") for c in report.failures)


def test_inversions_without_reversal_fail(z2_groupoid):
    x = nerve(z2_groupoid, 2)
    report = check_star_simplicial(x, [identity(level) for level in x.levels])
    assert not report.passed


def test_missing_level_is_an_error(z2_groupoid):
    with pytest.raises(StructureError):
        check_simplicial(nerve(z2_groupoid, 1), 2)


def test_monoid_shape_is_checked():
    with pytest.raises(StructureError):
        RelMonoid(A, identity(A), empty(point(), A))


def test_chain_folds_left():
    r = graph(A, B, {1: "a", 2: "b"})
    s = graph(B, X, {"a": "y", "b": "x"})
    assert chain(r, s).pairs == {(1, "y"), (2, "x")}
