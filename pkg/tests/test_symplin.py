import pytest
import sympy as sp

from canrel.core.errors import DimensionError, NotCoisotropicError, StructureError
from canrel.symplin.chains import CorrChain, ww_compose, ww_two_term
from canrel.symplin.cotangent import (
    check_lin_comonoid,
    check_lin_comonoid_morphism,
    check_lin_hopf,
    cotangent_comonoid,
    cotangent_lift,
    schwartz,
    vector_hopf,
)
from canrel.symplin.randomness import random_lin_rel, random_matrix
from canrel.symplin.reduction import factor, induced_iso, reduce
from canrel.symplin.relations import (
    chain_lin,
    compose_lin,
    dom_im,
    lin_equal,
    lin_identity,
    lin_rel,
    lin_transpose,
)
from canrel.symplin.spaces import (
    Matrix,
    SympSpace,
    classify_subspace,
    cotangent_space,
    orth,
    point_space,
    span,
    standard_space,
    whole,
    zero,
)

Q2 = standard_space(1)
Q4 = standard_space(2)


def is_identity(l, space):
    return lin_equal(l, lin_identity(space))[0]


def is_reduction(l):
    return is_identity(chain_lin(lin_transpose(l), l), l.dst)


# Spaces and subspaces


def test_form_is_checked():
    with pytest.raises(DimensionError):
        SympSpace(Matrix([[0]]))
    with pytest.raises(StructureError):
        SympSpace(Matrix([[0, 1], [1, 0]]))
    with pytest.raises(StructureError):
        SympSpace(Matrix([[0, 0], [0, 0]]))


def test_orth_examples():
    assert orth(whole(Q2)).dim == 0
    line = span(Q2, [[1, 0]])
    assert orth(line) == line


def test_double_orthogonal(rng):
    for _ in range(15):
        k = rng.randint(0, 4)
        u = span(Q4, [list(row) for row in random_matrix(k, 4, rng).tolist()])
        assert u.dim + orth(u).dim == 4
        assert orth(orth(u)) == u


def test_classify_subspace():
    assert classify_subspace(span(Q2, [[1, 0]]))["lagrangian"]
    flags = classify_subspace(zero(Q2))
    assert flags["isotropic"] and not flags["coisotropic"]
    assert classify_subspace(whole(Q4))["coisotropic"]
    assert classify_subspace(whole(Q4))["symplectic"]


# Composition


def test_identity_composition(rng):
    l = random_lin_rel(Q2, Q4, rng)
    composite, flags = compose_lin(lin_identity(Q2), l)
    assert lin_equal(composite, l)[0]
    assert flags == {"transversal": True, "strongly_transversal": True}


def test_composite_dimension(rng):
    for _ in range(10):
        l1, l2 = random_lin_rel(Q2, Q2, rng), random_lin_rel(Q2, Q4, rng)
        composite, _ = compose_lin(l1, l2)
        assert composite.graph.dim == 3
        dom_im(composite)


def test_state_against_its_transpose():
    state = lin_rel(point_space(), Q2, [[1, 0]])
    composite, flags = compose_lin(state, lin_transpose(state))
    assert is_identity(composite, point_space())
    assert not flags["transversal"]


def test_endpoint_mismatch():
    with pytest.raises(DimensionError):
        compose_lin(lin_identity(Q2), lin_identity(Q4))


def test_dom_im_examples():
    dom, im = dom_im(lin_identity(Q4))
    assert dom == whole(Q4) and im == whole(Q4)
    dom, im = dom_im(lin_identity(point_space()))
    assert dom.dim == im.dim == 0


# Reduction and factorization


def test_reduce_examples():
    assert reduce(whole(Q4)).quotient.dim == 4
    assert is_identity(reduce(whole(Q2)).rel, Q2)
    assert reduce(span(Q2, [[1, 0]])).quotient.dim == 0
    data = reduce(span(Q4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]))
    assert data.quotient.dim == 2
    assert dom_im(data.rel)[0] == data.coisotropic
    assert is_reduction(data.rel)


def test_reduce_rejects_isotropic_input():
    with pytest.raises(NotCoisotropicError):
        reduce(zero(Q2))


def test_induced_iso_examples():
    assert induced_iso(lin_identity(Q2)).matrix == Matrix(sp.eye(2))
    rel = reduce(span(Q4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])).rel
    assert induced_iso(rel).matrix == Matrix(sp.eye(2))


def test_factor_identity():
    legs = factor(lin_identity(Q2))
    for leg in (legs.reduction, legs.iso, legs.coreduction):
        assert is_identity(leg, Q2)


def test_factor_recomposes(rng):
    for _ in range(10):
        l = random_lin_rel(Q2, Q4, rng)
        legs = factor(l)
        assert lin_equal(chain_lin(legs.reduction, legs.iso, legs.coreduction), l)[0]
        assert is_reduction(legs.reduction)
        assert is_reduction(lin_transpose(legs.coreduction))


# Cotangent lifts


def test_cotangent_spaces():
    assert cotangent_space(0).dim == 0
    assert cotangent_space(1).form == Q2.form
    assert cotangent_space(2).dim == 4


def test_cotangent_lift_examples():
    assert is_identity(cotangent_lift(Matrix(sp.eye(2))), cotangent_space(2))
    doubling = lin_rel(cotangent_space(1), cotangent_space(1), [[1, 0, 2, 0], [0, 2, 0, 1]])
    assert lin_equal(cotangent_lift(Matrix([[2]])), doubling)[0]


def test_surjective_maps_lift_to_reductions():
    assert is_reduction(cotangent_lift(Matrix([[1, 0]])))
    assert not is_reduction(cotangent_lift(Matrix([[1], [0]])))


def test_cotangent_functoriality(rng):
    for _ in range(10):
        g = random_matrix(2, 1, rng)
        f = random_matrix(2, 2, rng)
        composite, flags = compose_lin(cotangent_lift(g), cotangent_lift(f))
        assert lin_equal(composite, cotangent_lift(Matrix(f * g)))[0]
        assert flags["strongly_transversal"]


def test_schwartz():
    assert lin_equal(schwartz(0), lin_identity(point_space()))[0]
    expected = lin_rel(cotangent_space(1), schwartz(1).dst, [[1, 0, 1, 0], [0, 1, 0, -1]])
    assert lin_equal(schwartz(1), expected)[0]
    for n in (1, 2):
        assert is_identity(chain_lin(schwartz(n), lin_transpose(schwartz(n))), cotangent_space(n))


def test_cotangent_comonoid():
    assert check_lin_comonoid(cotangent_comonoid(0)).passed
    c = cotangent_comonoid(1)
    assert c.coproduct.graph.dim == 3
    assert check_lin_comonoid(c).passed


def test_lifts_are_comonoid_morphisms(rng):
    for _ in range(5):
        f = random_matrix(2, 1, rng)
        report = check_lin_comonoid_morphism(cotangent_lift(f), cotangent_comonoid(1), cotangent_comonoid(2))
        assert report.passed


@pytest.mark.parametrize("n", [0, 1, 2])
def test_vector_hopf(n):
    assert check_lin_hopf(vector_hopf(n)).passed


# Chains


def test_single_leg_chain(rng):
    l = random_lin_rel(Q2, Q2, rng)
    composite, flags = ww_compose(CorrChain((l,)))
    assert composite == l and flags == []


def test_reduction_chain_collapses():
    red = reduce(span(Q4, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]])).rel
    composite, _ = ww_compose(CorrChain((red, lin_transpose(red), red)))
    assert lin_equal(composite, red)[0]


def test_chain_of_lifts():
    f, g, h = Matrix([[1, 1]]), Matrix([[2], [1]]), Matrix([[1, 0], [1, 3]])
    composite, flags = ww_compose(CorrChain((cotangent_lift(f), cotangent_lift(g), cotangent_lift(h))))
    assert lin_equal(composite, cotangent_lift(Matrix(h * g * f)))[0]
    assert all(junction["strongly_transversal"] for junction in flags)


def test_legs_must_meet():
    with pytest.raises(StructureError):
        CorrChain((lin_identity(Q2), lin_identity(Q4)))
    with pytest.raises(StructureError):
        CorrChain(())


def test_two_term_identity():
    c, r = ww_two_term(CorrChain((lin_identity(Q2),)))
    assert is_identity(chain_lin(c, r), Q2)


def test_two_term_random_chains(rng):
    for _ in range(5):
        chain = CorrChain((random_lin_rel(Q2, Q4, rng), random_lin_rel(Q4, Q2, rng)))
        composite, _ = ww_compose(chain)
        c, r = ww_two_term(chain)
        assert lin_equal(chain_lin(c, r), composite)[0]
        assert is_identity(chain_lin(c, lin_transpose(c)), Q2)
        assert is_reduction(r)
