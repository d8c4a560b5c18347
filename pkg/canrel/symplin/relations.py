"""
CANREL Linear Canonical Relations
Lagrangian subspaces of dual(src) ⊕ dst, their composition with
transversality flags, and the structural maps of the direct sum.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import sympy as sp

from canrel.core.errors import DimensionError, StructureError
from canrel.symplin.spaces import (
    Matrix,
    Subspace,
    SympSpace,
    as_matrix,
    classify_subspace,
    contains,
    direct_sum,
    dual,
    hstack,
    nullspace_rows,
    rank,
    span,
    zeros,
)

logger = logging.getLogger(__name__)

Flags = Dict[str, bool]


@dataclass(frozen=True)
class LinCanRel:
    src: SympSpace
    dst: SympSpace
    graph: Subspace

    def __post_init__(self):
        ambient = direct_sum(dual(self.src), self.dst)
        if self.graph.ambient != ambient:
            raise DimensionError(
                f"graph lives in a space of dimension {self.graph.ambient.dim}, "
                f"expected {self.src.dim} + {self.dst.dim}"
            )
        if 2 * self.graph.dim != ambient.dim or not classify_subspace(self.graph)["lagrangian"]:
            raise StructureError(
                f"graph {self.src.id} -> {self.dst.id} of dimension {self.graph.dim} is not lagrangian"
            )

    @property
    def src_part(self) -> Matrix:
        return Matrix(self.graph.basis[:, : self.src.dim])

    @property
    def dst_part(self) -> Matrix:
        return Matrix(self.graph.basis[:, self.src.dim :])


def lin_rel(src: SympSpace, dst: SympSpace, rows: Sequence[Sequence]) -> LinCanRel:
    """The relation spanned by rows (x, y) with x in src and y in dst."""
    return LinCanRel(src, dst, span(direct_sum(dual(src), dst), rows))


def lin_graph(f: Matrix, src: SympSpace, dst: SympSpace) -> LinCanRel:
    """Graph of y = f x; f must be a symplectic map src -> dst."""
    f = Matrix(f)
    if f.shape != (dst.dim, src.dim):
        raise DimensionError(f"map of shape {f.shape} between spaces {src.dim} -> {dst.dim}")
    rows = [
        [1 if k == i else 0 for k in range(src.dim)] + list(f.col(i))
        for i in range(src.dim)
    ]
    return lin_rel(src, dst, rows)


def lin_identity(v: SympSpace) -> LinCanRel:
    return lin_graph(sp.eye(v.dim) if v.dim else zeros(0, 0), v, v)


def lin_transpose(l: LinCanRel) -> LinCanRel:
    return LinCanRel(
        l.dst,
        l.src,
        Subspace(direct_sum(dual(l.dst), l.src), hstack(l.dst_part, l.src_part)),
    )


def cross_lin(l1: LinCanRel, l2: LinCanRel) -> LinCanRel:
    """l1 ⊕ l2 acting componentwise."""
    a, b = l1.graph.basis, l2.graph.basis
    x1, x2 = l1.src.dim, l2.src.dim
    y1, y2 = l1.dst.dim, l2.dst.dim
    rows = [list(a[i, :x1]) + [0] * x2 + list(a[i, x1:]) + [0] * y2 for i in range(a.rows)]
    rows += [[0] * x1 + list(b[i, :x2]) + [0] * y1 + list(b[i, x2:]) for i in range(b.rows)]
    return lin_rel(direct_sum(l1.src, l2.src), direct_sum(l1.dst, l2.dst), rows)


def permutation(spaces: Sequence[SympSpace], order: Sequence[int]) -> LinCanRel:
    """Symplectomorphism ⊕ spaces -> ⊕ spaces[order[k]] reordering summands."""
    offsets, start = [], 0
    for s in spaces:
        offsets.append(start)
        start += s.dim
    src = direct_sum(*spaces)
    dst = direct_sum(*(spaces[k] for k in order))
    f = sp.zeros(dst.dim, src.dim)
    row = 0
    for k in order:
        for j in range(spaces[k].dim):
            f[row, offsets[k] + j] = 1
            row += 1
    return lin_graph(Matrix(f), src, dst)


def lin_swap(v: SympSpace, w: SympSpace) -> LinCanRel:
    return permutation([v, w], [1, 0])


def lin_middle_swap(a: SympSpace, b: SympSpace, c: SympSpace, d: SympSpace) -> LinCanRel:
    """(A ⊕ B) ⊕ (C ⊕ D) -> (A ⊕ C) ⊕ (B ⊕ D)."""
    return permutation([a, b, c, d], [0, 2, 1, 3])


def lin_assoc(a: SympSpace, b: SympSpace, c: SympSpace) -> LinCanRel:
    # direct sums are strictly associative
    return lin_identity(direct_sum(a, b, c))


def compose_lin(l1: LinCanRel, l2: LinCanRel) -> Tuple[LinCanRel, Flags]:
    """
    l1 followed by l2, with transversality flags.

    The fibre product is the space of coefficient pairs (a, c) with
    a·B = c·C, where rows [A | B] span l1 and [C | D] span l2. Transversal
    means the fibre product has the expected dimension; strongly transversal
    adds that it projects injectively to the composite.

    Raises:
        DimensionError: If l1.dst and l2.src differ
    """
    if l1.dst != l2.src:
        raise DimensionError(f"cannot compose {l1.src.id}->{l1.dst.id} with {l2.src.id}->{l2.dst.id}")
    A, B = l1.src_part, l1.dst_part
    C, D = l2.src_part, l2.dst_part
    k1, k2 = A.rows, C.rows
    fibre = nullspace_rows(hstack(Matrix(B.T), Matrix(-C.T)))
    if fibre.rows == 0:
        rows = zeros(0, l1.src.dim + l2.dst.dim)
    else:
        left = Matrix(fibre[:, :k1]) * A if k1 else zeros(fibre.rows, l1.src.dim)
        right = Matrix(fibre[:, k1:]) * D if k2 else zeros(fibre.rows, l2.dst.dim)
        rows = hstack(Matrix(left), Matrix(right))
    transversal = 2 * fibre.rows == l1.src.dim + l2.dst.dim
    strongly = transversal and rank(rows) == fibre.rows
    result = LinCanRel(l1.src, l2.dst, Subspace(direct_sum(dual(l1.src), l2.dst), rows))
    return result, {"transversal": transversal, "strongly_transversal": strongly}


def chain_lin(*rels: LinCanRel) -> LinCanRel:
    acc = rels[0]
    for r in rels[1:]:
        acc, _ = compose_lin(acc, r)
    return acc


def lin_equal(l1: LinCanRel, l2: LinCanRel) -> Tuple[bool, Any]:
    """Equality of graphs with a basis row of one graph missing from the other."""
    if l1.src != l2.src or l1.dst != l2.dst:
        return False, {"endpoints": [[l1.src.dim, l1.dst.dim], [l2.src.dim, l2.dst.dim]]}
    if l1.graph == l2.graph:
        return True, None
    for row in l1.graph.rows():
        if not contains(l2.graph, row):
            return False, {"row": [str(x) for x in row], "only_in": "left"}
    row = next(r for r in l2.graph.rows() if not contains(l1.graph, r))
    return False, {"row": [str(x) for x in row], "only_in": "right"}


def dom_im(l: LinCanRel) -> Tuple[Subspace, Subspace]:
    """Projections of the graph to src and dst; both are coisotropic."""
    dom = Subspace(l.src, l.src_part)
    im = Subspace(l.dst, l.dst_part)
    for name, u in (("domain", dom), ("image", im)):
        if not classify_subspace(u)["coisotropic"]:
            raise StructureError(f"{name} of {l.src.id}->{l.dst.id} is not coisotropic")
    return dom, im


def unit_rel(v: SympSpace, rows: Optional[List[Sequence]] = None) -> LinCanRel:
    """pt -> V with image spanned by `rows`."""
    return lin_rel(direct_sum(), v, rows or [])
