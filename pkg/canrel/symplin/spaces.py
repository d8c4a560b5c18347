"""
CANREL Symplectic Spaces
Exact rational symplectic vector spaces and their subspaces.

Vectors are rows. A subspace is stored by the nonzero rows of its reduced
row-echelon basis, so two subspaces are equal exactly when their bases are.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence

import sympy as sp

from canrel.core.errors import DimensionError, StructureError

Matrix = sp.ImmutableMatrix


def zeros(rows: int, cols: int) -> Matrix:
    return Matrix(sp.zeros(rows, cols))


def as_matrix(rows: Iterable[Sequence], cols: int) -> Matrix:
    """Rows of rationals as an immutable matrix with `cols` columns."""
    rows = [[sp.Rational(x) for x in row] for row in rows]
    for row in rows:
        if len(row) != cols:
            raise DimensionError(f"row of length {len(row)} in a matrix with {cols} columns")
    if not rows:
        return zeros(0, cols)
    return Matrix(rows)


def vstack(*blocks: Matrix) -> Matrix:
    cols = blocks[0].cols
    rows = [list(b.row(i)) for b in blocks for i in range(b.rows)]
    return as_matrix(rows, cols)


def hstack(*blocks: Matrix) -> Matrix:
    n = blocks[0].rows
    if any(b.rows != n for b in blocks):
        raise DimensionError("hstack of blocks with different row counts")
    cols = sum(b.cols for b in blocks)
    return as_matrix(([x for b in blocks for x in b.row(i)] for i in range(n)), cols)


def block_diag(*blocks: Matrix) -> Matrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    out = sp.zeros(n, m)
    r = c = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                out[r + i, c + j] = b[i, j]
        r += b.rows
        c += b.cols
    return Matrix(out)


def canonical(m: Matrix) -> Matrix:
    """Nonzero rows of the reduced row-echelon form."""
    if m.rows == 0 or m.cols == 0:
        return zeros(0, m.cols)
    reduced, pivots = m.rref()
    return Matrix(reduced[: len(pivots), :])


def nullspace_rows(m: Matrix) -> Matrix:
    """Rows spanning {v : m vᵀ = 0}."""
    if m.cols == 0:
        return zeros(0, 0)
    if m.rows == 0:
        return Matrix(sp.eye(m.cols))
    vectors = m.nullspace()
    if not vectors:
        return zeros(0, m.cols)
    return canonical(as_matrix((list(v) for v in vectors), m.cols))


def rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return m.rank()


@dataclass(frozen=True)
class SympSpace:
    """Qᵈ with a nondegenerate antisymmetric form Ω; ω(u, v) = u Ω vᵀ."""

    form: Matrix
    id: str = field(default="V", compare=False)

    def __post_init__(self):
        form = Matrix(self.form)
        object.__setattr__(self, "form", form)
        if form.rows != form.cols:
            raise DimensionError(f"{self.id}: form must be square, got {form.shape}")
        if form.rows % 2:
            raise DimensionError(f"{self.id}: odd dimension {form.rows}")
        if form.T != -form:
            raise StructureError(f"{self.id}: form is not antisymmetric")
        if form.rows and form.det() == 0:
            raise StructureError(f"{self.id}: form is degenerate")

    @property
    def dim(self) -> int:
        return self.form.rows

    def omega(self, u: Matrix, v: Matrix):
        return (u * self.form * v.T)[0, 0]


def point_space() -> SympSpace:
    return SympSpace(zeros(0, 0), id="pt")


def standard_space(n: int) -> SympSpace:
    """Q²ⁿ with n Darboux blocks [[0, 1], [-1, 0]] on the diagonal."""
    if n < 0:
        raise DimensionError(f"negative dimension {n}")
    block = Matrix([[0, 1], [-1, 0]])
    return SympSpace(block_diag(*([block] * n)) if n else zeros(0, 0), id=f"Q{2 * n}")


def cotangent_space(n: int) -> SympSpace:
    """T*Qⁿ with coordinates (q, p) and Ω = [[0, I], [-I, 0]]."""
    if n < 0:
        raise DimensionError(f"negative dimension {n}")
    form = sp.zeros(2 * n, 2 * n)
    for i in range(n):
        form[i, n + i] = 1
        form[n + i, i] = -1
    return SympSpace(Matrix(form), id=f"T*Q{n}")


def dual(v: SympSpace) -> SympSpace:
    """The same space with the opposite form."""
    return SympSpace(-v.form, id=f"{v.id}~")


def direct_sum(*spaces: SympSpace) -> SympSpace:
    if not spaces:
        return point_space()
    return SympSpace(block_diag(*(s.form for s in spaces)), id="+".join(s.id for s in spaces))


@dataclass(frozen=True)
class Subspace:
    ambient: SympSpace
    basis: Matrix

    def __post_init__(self):
        basis = Matrix(self.basis)
        if basis.cols != self.ambient.dim:
            raise DimensionError(
                f"basis vectors have length {basis.cols}, ambient dimension is {self.ambient.dim}"
            )
        object.__setattr__(self, "basis", canonical(basis))

    @property
    def dim(self) -> int:
        return self.basis.rows

    def rows(self):
        return [self.basis.row(i) for i in range(self.basis.rows)]


def span(ambient: SympSpace, vectors: Iterable[Sequence]) -> Subspace:
    return Subspace(ambient, as_matrix(vectors, ambient.dim))


def whole(ambient: SympSpace) -> Subspace:
    return Subspace(ambient, Matrix(sp.eye(ambient.dim)) if ambient.dim else zeros(0, 0))


def zero(ambient: SympSpace) -> Subspace:
    return Subspace(ambient, zeros(0, ambient.dim))


def _same_ambient(u: Subspace, w: Subspace) -> None:
    if u.ambient != w.ambient:
        raise DimensionError(f"subspaces of different spaces {u.ambient.id} and {w.ambient.id}")


def orth(u: Subspace) -> Subspace:
    """Symplectic orthogonal: the nullspace of basis·Ω."""
    if u.dim == 0:
        return whole(u.ambient)
    return Subspace(u.ambient, nullspace_rows(Matrix(u.basis * u.ambient.form)))


def subspace_sum(u: Subspace, w: Subspace) -> Subspace:
    _same_ambient(u, w)
    return Subspace(u.ambient, vstack(u.basis, w.basis))


def intersection(u: Subspace, w: Subspace) -> Subspace:
    """(U^⊥ + W^⊥)^⊥."""
    return orth(subspace_sum(orth(u), orth(w)))


def contains(u: Subspace, v: Sequence) -> bool:
    row = as_matrix([list(v)], u.ambient.dim)
    return rank(vstack(u.basis, row)) == u.dim


def is_subset(u: Subspace, w: Subspace) -> bool:
    _same_ambient(u, w)
    return rank(vstack(w.basis, u.basis)) == w.dim


def classify_subspace(u: Subspace) -> Dict[str, bool]:
    perp = orth(u)
    isotropic = is_subset(u, perp)
    coisotropic = is_subset(perp, u)
    return {
        "isotropic": isotropic,
        "coisotropic": coisotropic,
        "lagrangian": isotropic and coisotropic,
        "symplectic": intersection(u, perp).dim == 0,
    }
