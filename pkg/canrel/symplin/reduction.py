"""
CANREL Linear Reduction
Coisotropic reduction C -> C/C^⊥, the symplectomorphism a canonical relation
induces between the reductions of its domain and image, and the
reduction / symplectomorphism / coreduction factorization.
"""

import logging
from dataclasses import dataclass

import sympy as sp

from canrel.core.errors import NotCoisotropicError, StructureError
from canrel.symplin.relations import (
    LinCanRel,
    chain_lin,
    dom_im,
    lin_equal,
    lin_graph,
    lin_rel,
    lin_transpose,
)
from canrel.symplin.spaces import (
    Matrix,
    Subspace,
    SympSpace,
    as_matrix,
    classify_subspace,
    orth,
    rank,
    vstack,
    zeros,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReductionData:
    """`projection` maps v in C to its quotient coordinates v·projection."""

    coisotropic: Subspace
    quotient: SympSpace
    projection: Matrix
    rel: LinCanRel


def _extend_basis(rows: Matrix, candidates, cols: int) -> Matrix:
    """Greedily append candidate rows that raise the rank."""
    acc = rows
    for row in candidates:
        trial = vstack(acc, as_matrix([list(row)], cols))
        if rank(trial) > acc.rows:
            acc = trial
    return acc


def reduce(c: Subspace) -> ReductionData:
    """
    Quotient of a coisotropic subspace by its orthogonal.

    Quotient coordinates use the rows of C's echelon basis that complete a
    basis of C^⊥; the induced form is checked against representatives.

    Raises:
        NotCoisotropicError: If c does not contain its orthogonal
    """
    if not classify_subspace(c)["coisotropic"]:
        raise NotCoisotropicError(f"subspace of dimension {c.dim} in {c.ambient.id} is not coisotropic")
    ambient = c.ambient
    n = ambient.dim
    perp = orth(c)
    with_perp = _extend_basis(perp.basis, c.rows(), n)
    k = with_perp.rows - perp.dim
    complement = Matrix(with_perp[perp.dim :, :]) if k else zeros(0, n)
    full = vstack(complement, perp.basis)
    full = _extend_basis(full, (sp.eye(n).row(i) for i in range(n)), n)
    if n:
        projection = Matrix(Matrix(full.inv())[:, :k])
    else:
        projection = zeros(0, 0)
    form = complement * ambient.form * complement.T if k else zeros(0, 0)
    quotient = SympSpace(Matrix(form), id=f"{ambient.id}//{c.dim}")

    for p in perp.rows():
        if k and any(x != 0 for x in p * projection):
            raise StructureError(f"projection does not kill {list(p)} in C^⊥")
    for u in c.rows():
        for v in c.rows():
            if k and ambient.omega(u, v) != ((u * projection) * form * (v * projection).T)[0, 0]:
                raise StructureError("induced form depends on representatives")
    rows = [list(u) + (list(u * projection) if k else []) for u in c.rows()]
    rel = lin_rel(ambient, quotient, rows)
    logger.debug("reduce: C of dimension %d in %d gives quotient of dimension %d", c.dim, n, k)
    return ReductionData(coisotropic=c, quotient=quotient, projection=projection, rel=rel)


@dataclass(frozen=True)
class InducedIso:
    """`matrix` T sends quotient coordinates [v] of the domain to [w] = [v]·T."""

    source: ReductionData
    target: ReductionData
    matrix: Matrix

    def as_rel(self) -> LinCanRel:
        return lin_graph(Matrix(self.matrix.T), self.source.quotient, self.target.quotient)


def induced_iso(l: LinCanRel) -> InducedIso:
    """
    The map dom/dom^⊥ -> im/im^⊥, [v] ↦ [w] for (v, w) in the graph.

    Raises:
        StructureError: If the map is not well defined, not bijective or does
            not preserve the induced forms
    """
    dom, im = dom_im(l)
    red_dom, red_im = reduce(dom), reduce(im)
    kd, ki = red_dom.quotient.dim, red_im.quotient.dim
    if kd != ki:
        raise StructureError(f"quotients of dimensions {kd} and {ki} cannot be symplectomorphic")
    if kd == 0:
        return InducedIso(red_dom, red_im, zeros(0, 0))
    lhs = Matrix(l.src_part * red_dom.projection)
    rhs = Matrix(l.dst_part * red_im.projection)
    try:
        solution, params = lhs.gauss_jordan_solve(rhs)
    except ValueError:
        raise StructureError("graph relates one class to several classes") from None
    if params.shape[0]:
        raise StructureError("graph does not determine the induced map")
    T = Matrix(solution)
    if T.det() == 0:
        raise StructureError("induced map is not bijective")
    if T * red_im.quotient.form * T.T != red_dom.quotient.form:
        raise StructureError("induced map does not preserve the quotient forms")
    return InducedIso(red_dom, red_im, T)


@dataclass(frozen=True)
class Factorization:
    reduction: LinCanRel
    iso: LinCanRel
    coreduction: LinCanRel


def factor(l: LinCanRel) -> Factorization:
    """
    Reduction of the domain, induced symplectomorphism, coreduction onto the
    image; their composite is checked to be l.
    """
    iso = induced_iso(l)
    result = Factorization(
        reduction=iso.source.rel,
        iso=iso.as_rel(),
        coreduction=lin_transpose(iso.target.rel),
    )
    ok, witness = lin_equal(chain_lin(result.reduction, result.iso, result.coreduction), l)
    if not ok:
        raise StructureError(f"factorization does not recompose: {witness}")
    return result
