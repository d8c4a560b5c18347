"""
CANREL Cotangent Lifts
The cotangent functor on linear maps, the Schwartz transform, the
cotangent comonoid and the Hopf structure of a vector group, with checkers
for the (co)monoid and Hopf diagrams in the linear category.
"""

import logging
from dataclasses import dataclass

import sympy as sp

from canrel.core.errors import DimensionError, StructureError
from canrel.core.report import Report
from canrel.symplin.relations import (
    LinCanRel,
    chain_lin,
    cross_lin,
    lin_equal,
    lin_graph,
    lin_identity,
    lin_middle_swap,
    lin_rel,
    lin_transpose,
)
from canrel.symplin.spaces import Matrix, cotangent_space, direct_sum, dual, point_space, zeros

logger = logging.getLogger(__name__)


def _unit_vector(n: int, i: int):
    return [1 if k == i else 0 for k in range(n)]


def cotangent_lift(f: Matrix) -> LinCanRel:
    """
    T*f for f: Qⁿ -> Qᵐ given as an m x n matrix: the graph
    {((x, fᵀη), (f x, η))} from T*Qⁿ to T*Qᵐ.
    """
    f = Matrix(f)
    m, n = f.shape
    rows = [
        _unit_vector(n, i) + [0] * n + list(f.col(i)) + [0] * m
        for i in range(n)
    ]
    rows += [
        [0] * n + list(f.row(j)) + [0] * m + _unit_vector(m, j)
        for j in range(m)
    ]
    return lin_rel(cotangent_space(n), cotangent_space(m), rows)


def zero_map(rows: int, cols: int) -> Matrix:
    return zeros(rows, cols)


def schwartz(n: int) -> LinCanRel:
    """(p, ξ) ↦ (p, -ξ) from T*Qⁿ to its dual."""
    space = cotangent_space(n)
    f = sp.diag(*([1] * n + [-1] * n)) if n else zeros(0, 0)
    return lin_graph(Matrix(f), space, dual(space))


def cotangent_split(a: int, b: int) -> LinCanRel:
    """T*Q^(a+b) -> T*Qᵃ ⊕ T*Qᵇ, (x1, x2, ξ1, ξ2) ↦ ((x1, ξ1), (x2, ξ2))."""
    src = cotangent_space(a + b)
    dst = direct_sum(cotangent_space(a), cotangent_space(b))
    order = (
        list(range(a))
        + [a + b + i for i in range(a)]
        + [a + i for i in range(b)]
        + [2 * a + b + i for i in range(b)]
    )
    f = sp.zeros(dst.dim, src.dim)
    for row, col in enumerate(order):
        f[row, col] = 1
    return lin_graph(Matrix(f), src, dst)


def _stack_identity(n: int, copies: int, vertical: bool) -> Matrix:
    eye = sp.eye(n)
    if vertical:
        blocks = sp.Matrix.vstack(*([eye] * copies))
    else:
        blocks = sp.Matrix.hstack(*([eye] * copies))
    return Matrix(blocks)


@dataclass(frozen=True)
class LinMonoid:
    carrier: object
    product: LinCanRel
    unit: LinCanRel


@dataclass(frozen=True)
class LinComonoid:
    carrier: object
    coproduct: LinCanRel
    counit: LinCanRel


@dataclass(frozen=True)
class LinHopf:
    monoid: LinMonoid
    comonoid: LinComonoid
    antipode: LinCanRel


def cotangent_comonoid(n: int) -> LinComonoid:
    """Δ(p, ξ + η) = ((p, ξ), (p, η)); ε is the lift of Qⁿ -> 0."""
    space = cotangent_space(n)
    if n == 0:
        unit = lin_identity(space)
        return LinComonoid(space, unit, unit)
    coproduct = chain_lin(cotangent_lift(_stack_identity(n, 2, vertical=True)), cotangent_split(n, n))
    counit = cotangent_lift(zero_map(0, n))
    return LinComonoid(space, coproduct, counit)


def vector_hopf(n: int) -> LinHopf:
    """T*Qⁿ with product the lift of addition and antipode the lift of negation."""
    comonoid = cotangent_comonoid(n)
    space = comonoid.carrier
    if n == 0:
        unit = lin_identity(space)
        return LinHopf(LinMonoid(space, unit, unit), comonoid, unit)
    product = chain_lin(lin_transpose(cotangent_split(n, n)), cotangent_lift(_stack_identity(n, 2, vertical=False)))
    unit = cotangent_lift(zero_map(n, 0))
    antipode = cotangent_lift(Matrix(-sp.eye(n)))
    return LinHopf(LinMonoid(space, product, unit), comonoid, antipode)


def check_lin_monoid(m: LinMonoid, subject: str = "monoid") -> Report:
    report = Report(subject)
    ident = lin_identity(m.carrier)
    report.check(
        "associativity",
        lin_equal(chain_lin(cross_lin(m.product, ident), m.product), chain_lin(cross_lin(ident, m.product), m.product)),
    )
    report.check("left-unit", lin_equal(chain_lin(cross_lin(m.unit, ident), m.product), ident))
    report.check("right-unit", lin_equal(chain_lin(cross_lin(ident, m.unit), m.product), ident))
    return report


def check_lin_comonoid(c: LinComonoid, subject: str = "comonoid") -> Report:
    report = Report(subject)
    ident = lin_identity(c.carrier)
    report.check(
        "coassociativity",
        lin_equal(chain_lin(c.coproduct, cross_lin(c.coproduct, ident)), chain_lin(c.coproduct, cross_lin(ident, c.coproduct))),
    )
    report.check("left-counit", lin_equal(chain_lin(c.coproduct, cross_lin(c.counit, ident)), ident))
    report.check("right-counit", lin_equal(chain_lin(c.coproduct, cross_lin(ident, c.counit)), ident))
    return report


def check_lin_hopf(h: LinHopf, subject: str = "hopf") -> Report:
    m, c, s = h.monoid, h.comonoid, h.antipode
    V = m.carrier
    if c.carrier != V:
        raise StructureError("monoid and comonoid live on different spaces")
    report = Report(subject)
    report.extend("monoid", check_lin_monoid(m))
    report.extend("comonoid", check_lin_comonoid(c))
    ident = lin_identity(V)
    report.check(
        "product-coproduct",
        lin_equal(
            chain_lin(m.product, c.coproduct),
            chain_lin(cross_lin(c.coproduct, c.coproduct), lin_middle_swap(V, V, V, V), cross_lin(m.product, m.product)),
        ),
    )
    report.check("product-counit", lin_equal(chain_lin(m.product, c.counit), cross_lin(c.counit, c.counit)))
    report.check("unit-coproduct", lin_equal(chain_lin(m.unit, c.coproduct), cross_lin(m.unit, m.unit)))
    report.check("unit-counit", lin_equal(chain_lin(m.unit, c.counit), lin_identity(point_space())))
    both = chain_lin(c.counit, m.unit)
    report.check("antipode-left", lin_equal(chain_lin(c.coproduct, cross_lin(s, ident), m.product), both))
    report.check("antipode-right", lin_equal(chain_lin(c.coproduct, cross_lin(ident, s), m.product), both))
    report.check("antipode-involution", lin_equal(chain_lin(s, s), ident))
    return report


def check_lin_comonoid_morphism(f: LinCanRel, c1: LinComonoid, c2: LinComonoid, subject: str = "comonoid-morphism") -> Report:
    if f.src != c1.carrier or f.dst != c2.carrier:
        raise DimensionError("morphism endpoints do not match the comonoids")
    report = Report(subject)
    report.check("coproduct", lin_equal(chain_lin(c1.coproduct, cross_lin(f, f)), chain_lin(f, c2.coproduct)))
    report.check("counit", lin_equal(chain_lin(f, c2.counit), c1.counit))
    return report
