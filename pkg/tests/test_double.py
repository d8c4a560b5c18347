import pytest

from canrel.core.errors import ValidationFailed
from canrel.dbl.core_groupoid import core
from canrel.dbl.double import FinDoubleGroupoid, require_double, transpose_double, validate_double
from canrel.dbl.examples import (
    build_examples,
    check_crossed,
    crossed,
    inclusion_crossed,
    product_double,
    trivial_crossed,
)
from canrel.dbl.generate import FrameSpace, abelian_groups, disjoint_double, extensions, thin_frame_sets
from canrel.dbl.reconstruct import find_double_isomorphism
from canrel.grpd.groupoid import FinGroupoid, validate
from canrel.grpd.groups import cyclic, direct_product, symmetric
from canrel.grpd.iso import find_isomorphism
from canrel.grpd.standard import group_groupoid, trivial_groupoid
from canrel.relcat.sets import POINT, FinSet
from canrel.services.enumeration_service import enumerate_doubles


def eckmann_hilton(table):
    """One group on both structures over a point; interchange needs it abelian."""
    g = group_groupoid(table)
    pt = trivial_groupoid(FinSet("pt", (POINT,)), id="pt")
    return FinDoubleGroupoid(g.arrows, pt, pt, g, g, id=f"eh({table.name})")


def commuting_squares(table):
    """Squares (left, right, bottom, top) of an abelian group with left + top = bottom + right."""
    g = group_groupoid(table)
    A, op, inv = g.arrows, g.comp, g.inv
    (e,) = g.unit.values()
    squares = FinSet("sq", [(l, r, b, t) for l in A for r in A for b in A for t in A if op[(l, t)] == op[(b, r)]])
    hstruct = FinGroupoid(
        arrows=squares,
        objects=A,
        source={s: s[1] for s in squares},
        target={s: s[0] for s in squares},
        unit={a: (a, a, e, e) for a in A},
        comp={
            (s, u): (s[0], u[1], op[(s[2], u[2])], op[(s[3], u[3])])
            for s in squares
            for u in squares
            if s[1] == u[0]
        },
        inv={s: (s[1], s[0], inv[s[2]], inv[s[3]]) for s in squares},
        id="sq|h",
    )
    vstruct = FinGroupoid(
        arrows=squares,
        objects=A,
        source={s: s[3] for s in squares},
        target={s: s[2] for s in squares},
        unit={a: (e, e, a, a) for a in A},
        comp={
            (s, u): (op[(s[0], u[0])], op[(s[1], u[1])], s[2], u[3])
            for s in squares
            for u in squares
            if s[3] == u[2]
        },
        inv={s: (inv[s[0]], inv[s[1]], s[3], s[2]) for s in squares},
        id="sq|v",
    )
    return FinDoubleGroupoid(squares, g, g, hstruct, vstruct, id=f"sq({table.name})")


# Examples


def test_example_sizes(dmain_z2, dinertia_pair2):
    assert len(dmain_z2.squares) == 2
    assert len(dinertia_pair2.squares) == 16
    assert len(crossed(trivial_crossed(cyclic(2), cyclic(2))).squares) == 4


def test_examples_validate(dmain_z2, dinertia_z2, dinertia_pair2):
    for d in (dmain_z2, dinertia_z2, dinertia_pair2):
        assert validate_double(d).passed, d
    assert validate_double(crossed(inclusion_crossed(symmetric(3)))).passed
    assert validate_double(product_double((cyclic(2), cyclic(3)))).passed


def test_build_examples_dispatch(z2_groupoid):
    assert build_examples("dmain", z2_groupoid).id == "dmain(Z2)"
    assert len(build_examples("product", (cyclic(2), cyclic(2))).squares) == 4
    with pytest.raises(ValueError) as e:
        build_examples("cube", z2_groupoid)
    assert "Supported" in str(e.value)


def test_crossed_module_checks():
    assert check_crossed(inclusion_crossed(symmetric(3))).passed
    assert check_crossed(trivial_crossed(cyclic(3), cyclic(2))).passed
    report = check_crossed(trivial_crossed(cyclic(2), symmetric(3)))
    assert not report.get("peiffer-identity").passed
    with pytest.raises(ValidationFailed):
        build_examples("crossed", trivial_crossed(cyclic(2), symmetric(3)))


# Validation


def test_commutative_interchange_passes():
    assert validate_double(eckmann_hilton(cyclic(3))).passed


def test_noncommutative_interchange_fails():
    report = validate_double(eckmann_hilton(symmetric(3)))
    check = report.get("interchange")
    assert not check.passed and len(check.witness) == 4
    with pytest.raises(ValidationFailed):
        require_double(eckmann_hilton(symmetric(3)))


# Transpose


def test_transpose_is_an_involution(dinertia_z2, dmain_z2):
    for d in (dinertia_z2, dmain_z2):
        t = transpose_double(d)
        assert validate_double(t).passed
        assert transpose_double(t) == d
        assert t.id == f"{d.id}^t"


def test_transposed_dmain_has_the_group_on_its_sides(dmain_z2, z2_groupoid):
    t = transpose_double(dmain_z2)
    assert t.side_h == z2_groupoid
    assert len(t.side_v.arrows) == len(t.side_v.objects)


# Core


def test_core_of_dmain_is_trivial(dmain_z3, pair2):
    for d in (dmain_z3, build_examples("dmain", pair2)):
        k = core(d)
        assert len(k.arrows) == len(k.objects)
        assert all(k.is_unit(a) for a in k.arrows)


def test_core_of_dinertia_is_the_groupoid(z3_groupoid, pair2, swap_groupoid, dinertia_z3, dinertia_pair2):
    assert find_isomorphism(core(dinertia_z3), z3_groupoid) is not None
    assert find_isomorphism(core(dinertia_pair2), pair2) is not None
    swap = build_examples("dinertia", swap_groupoid)
    assert find_isomorphism(core(swap), swap_groupoid) is not None


def test_core_survives_transpose(dinertia_z2, dinertia_pair2):
    for d in (dinertia_z2, dinertia_pair2):
        assert find_isomorphism(core(transpose_double(d)), core(d)) is not None


def test_one_square_core():
    d = build_examples("dmain", group_groupoid(cyclic(1)))
    k = core(d)
    assert len(k.arrows) == 1 and validate(k).passed


# Generation


def test_abelian_groups_by_order():
    assert [len(abelian_groups(n)) for n in (1, 2, 4, 8, 12)] == [1, 1, 2, 3, 2]
    assert all(len(g) == 12 for g in abelian_groups(12))


def test_commuting_squares_come_from_one_frame_set(Z2):
    d = commuting_squares(Z2)
    assert len(d.squares) == 8 and validate_double(d).passed
    space = FrameSpace(d.side_h, d.side_v)
    frames = frozenset(d.squares)
    assert frames in thin_frame_sets(space, 8)
    (found,) = list(extensions(space, frames, cyclic(1), "sq"))
    assert find_double_isomorphism(found, d) is not None


def test_kernel_over_a_point_is_eckmann_hilton():
    pt = trivial_groupoid(FinSet("pt", (POINT,)), id="pt")
    space = FrameSpace(pt, pt)
    (frames,) = thin_frame_sets(space, 4)
    K = direct_product(cyclic(2), cyclic(2))
    (found,) = list(extensions(space, frames, K, "k"))
    assert find_double_isomorphism(found, eckmann_hilton(K)) is not None


def test_enumeration_finds_the_commuting_squares(Z2):
    d = commuting_squares(Z2)
    assert any(find_double_isomorphism(d, e) is not None for e in enumerate_doubles(8, 2))


def test_disjoint_double_validates(dmain_z2, dinertia_z2):
    d = disjoint_double(dmain_z2, dinertia_z2)
    assert len(d.squares) == 6 and len(d.base) == 2
    assert validate_double(d).passed
