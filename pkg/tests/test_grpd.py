import pytest
from hypothesis import given, strategies as st

from canrel.core.errors import StructureError, ValidationFailed
from canrel.grpd.actions import action_groupoid, conjugation_action, target_action, validate_action
from canrel.grpd.bibundle import bibundle_check, isotropy_bibundle, self_bibundle, validate_bibundle
from canrel.grpd.bridge import action_bridge, extract_action, from_star_monoid, round_trip, to_star_monoid
from canrel.grpd.groupoid import FinGroupoid, isotropy, orbits, orbits_and_isotropy, require_valid, validate
from canrel.grpd.groups import (
    GroupTable,
    automorphisms,
    cyclic,
    dihedral,
    direct_product,
    homomorphisms,
    isomorphic,
    quaternion,
    small_groups,
    symmetric,
)
from canrel.grpd.iso import find_isomorphism, is_isomorphism, morita_invariants
from canrel.grpd.nerve import nerve
from canrel.grpd.standard import (
    build_standard,
    disjoint_union,
    get_supported_kinds,
    group_groupoid,
    inertia,
    pair_groupoid,
    product_groupoid,
    trivial_groupoid,
)
from canrel.relcat.relations import empty
from canrel.relcat.sets import FinSet, point
from canrel.relcat.structures import RelMonoid


def broken_z2():
    g = group_groupoid(cyclic(2))
    comp = dict(g.comp)
    comp[("1", "1")] = "1"
    return FinGroupoid(g.arrows, g.objects, g.source, g.target, g.unit, comp, g.inv, id="bad")


# Groups


def test_group_families():
    assert cyclic(4).order("1") == 4
    assert len(symmetric(3)) == 6 and not symmetric(3).is_abelian()
    assert len(dihedral(4)) == 8 and not dihedral(4).is_abelian()
    q = quaternion()
    assert q("i", "i") == "-1" and q("i", "j") == "k" and q("j", "i") == "-k"
    assert direct_product(cyclic(2), cyclic(3)).name == "Z2xZ3"


def test_small_groups_catalogue():
    orders = [len(g) for g in small_groups(8)]
    assert orders == [1, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 8, 8, 8]
    with pytest.raises(StructureError):
        small_groups(9)


def test_group_isomorphism_classes():
    assert isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2))) is None
    assert isomorphic(direct_product(cyclic(2), cyclic(3)), cyclic(6)) is not None
    assert isomorphic(dihedral(4), quaternion()) is None


def test_homomorphism_counts():
    assert len(list(homomorphisms(cyclic(2), cyclic(3)))) == 1
    assert len(list(homomorphisms(cyclic(2), cyclic(4)))) == 2
    assert len(automorphisms(cyclic(3))) == 2
    assert len(automorphisms(symmetric(3))) == 6


def test_incomplete_table_is_rejected():
    with pytest.raises(StructureError):
        GroupTable(("e", "a"), {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a"}, "broken")


# Validation


def test_standard_groupoids_validate(z2_groupoid, s3_groupoid, pair3, trivial_ab, swap_groupoid):
    for g in (z2_groupoid, s3_groupoid, pair3, trivial_ab, swap_groupoid):
        assert validate(g).passed, g


def test_broken_inverse_is_reported():
    report = validate(broken_z2())
    check = report.get("inverse-laws")
    assert not check.passed and check.witness == "1"
    with pytest.raises(ValidationFailed) as e:
        require_valid(broken_z2())
    assert e.value.report is not None


def test_unknown_arrow_in_table():
    g = group_groupoid(cyclic(2))
    with pytest.raises(StructureError):
        FinGroupoid(g.arrows, g.objects, g.source, g.target, g.unit, {("0", "9"): "0"}, g.inv)


def test_build_standard_dispatch():
    assert len(build_standard("pair", [1, 2, 3]).arrows) == 9
    assert len(build_standard("trivial", ["a"]).arrows) == 1
    assert set(get_supported_kinds()) == {"trivial", "pair", "group", "action"}
    with pytest.raises(ValueError) as e:
        build_standard("cube", [])
    assert "Supported" in str(e.value)


def test_product_and_disjoint_union(z2_groupoid, pair2):
    prod = product_groupoid(z2_groupoid, pair2)
    assert len(prod.arrows) == 8 and validate(prod).passed
    union = disjoint_union(z2_groupoid, pair2)
    assert len(union.arrows) == 6 and len(union.objects) == 3
    assert validate(union).passed
    assert len(orbits(union)) == 2


# Orbits and isotropy


def test_orbits_of_actions(swap_groupoid, fix_groupoid):
    assert orbits(swap_groupoid) == [("x", "y")]
    assert orbits(fix_groupoid) == [("x",), ("y",)]
    assert len(isotropy(swap_groupoid, "x")) == 1
    assert len(isotropy(fix_groupoid, "x")) == 2


def test_orbits_and_isotropy_requires_a_groupoid():
    with pytest.raises(ValidationFailed):
        orbits_and_isotropy(broken_z2())


def test_inertia(z2_groupoid, pair2):
    loops = inertia(z2_groupoid)
    assert len(loops.arrows) == 4 and len(orbits(loops)) == 2
    base = inertia(pair2)
    assert len(base.arrows) == 4 and len(orbits(base)) == 1
    assert validate(base).passed


# Isomorphism and Morita invariants


def test_swap_is_a_pair_groupoid(swap_groupoid, fix_groupoid):
    pair = pair_groupoid(FinSet("N", ("x", "y")))
    found = find_isomorphism(swap_groupoid, pair)
    assert found is not None
    objects, arrows = found
    assert is_isomorphism(swap_groupoid, pair, arrows, objects)
    assert find_isomorphism(swap_groupoid, fix_groupoid) is None


def test_morita_invariants(pair2, z2_groupoid):
    pt = group_groupoid(cyclic(1))
    assert morita_invariants(pair2, pt) == {"orbit_bijection": True, "isotropy_iso": True}
    assert morita_invariants(pair2, z2_groupoid) == {"orbit_bijection": True, "isotropy_iso": False}
    ab = trivial_groupoid(FinSet("M", ("a", "b")))
    assert not morita_invariants(ab, pt)["orbit_bijection"]


# Bridges


def test_round_trip_preserves_tables(z2_groupoid, s3_groupoid, pair2, swap_groupoid):
    for g in (z2_groupoid, s3_groupoid, pair2, swap_groupoid):
        assert round_trip(g) == g


@given(st.integers(1, 3), st.sampled_from(small_groups(4)))
def test_round_trip_on_transitive_groupoids(k, group):
    g = product_groupoid(pair_groupoid(FinSet("M", range(k))), group_groupoid(group))
    assert round_trip(g) == g


def test_from_star_monoid_rejects_a_broken_unit(z2_groupoid):
    monoid, star = to_star_monoid(z2_groupoid)
    broken = RelMonoid(monoid.carrier, monoid.product, empty(point(), monoid.carrier))
    with pytest.raises(ValidationFailed):
        from_star_monoid(broken, star)


def test_action_bridge_round_trip(pair2):
    action = target_action(pair2)
    assert extract_action(pair2, action_bridge(action)) == action


# Actions and bibundles


def test_actions_validate(pair2, s3_groupoid):
    assert validate_action(target_action(pair2)).passed
    assert validate_action(conjugation_action(s3_groupoid)).passed


def test_action_groupoid_of_target_action(pair2):
    g = action_groupoid(target_action(pair2))
    assert len(g.arrows) == 4 and validate(g).passed


def test_self_bibundle_is_biprincipal(pair2, z2_groupoid):
    for g in (pair2, z2_groupoid):
        b = self_bibundle(g)
        assert validate_bibundle(b).passed
        assert bibundle_check(b)["biprincipal"]


def test_isotropy_bibundle(pair2):
    b = isotropy_bibundle(pair2, 1)
    assert validate_bibundle(b).passed
    assert bibundle_check(b) == {"left_principal": True, "right_principal": True, "biprincipal": True}


# Nerve


def test_nerve_level_sizes(pair2, z2_groupoid):
    assert [len(level) for level in nerve(pair2, 2).levels] == [2, 4, 8]
    assert [len(level) for level in nerve(z2_groupoid, 3).levels] == [1, 2, 4, 8]
