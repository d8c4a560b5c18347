"""
CANREL Random Linear Data
Seeded random rational matrices and lagrangian subspaces for the property
suites.
"""

import random
from typing import List

import sympy as sp

from canrel.symplin.relations import LinCanRel
from canrel.symplin.spaces import Matrix, Subspace, SympSpace, as_matrix, direct_sum, dual, zeros


def random_matrix(rows: int, cols: int, rng: random.Random, bound: int = 3) -> Matrix:
    if rows == 0 or cols == 0:
        return zeros(rows, cols)
    return as_matrix(([rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)), cols)


def darboux_basis(v: SympSpace) -> List[Matrix]:
    """Rows e1, f1, e2, f2, ... with ω(ei, fj) = δij and all other pairings zero."""
    pending = [Matrix(sp.eye(v.dim).row(i)) for i in range(v.dim)]
    basis: List[Matrix] = []
    while pending:
        e = pending.pop(0)
        partner = next((i for i, w in enumerate(pending) if v.omega(e, w) != 0), None)
        if partner is None:
            continue
        f = pending.pop(partner)
        f = Matrix(f / v.omega(e, f))
        basis += [e, f]
        pending = [
            Matrix(w - v.omega(w, f) * e + v.omega(w, e) * f)
            for w in pending
        ]
        pending = [w for w in pending if any(x != 0 for x in w)]
    return basis


def random_lagrangian(v: SympSpace, rng: random.Random, bound: int = 2) -> Subspace:
    """Span of e'_i + Σ S_ij f'_j for symmetric S, with random pairs (e, f) turned to (f, -e)."""
    basis = darboux_basis(v)
    n = len(basis) // 2
    es, fs = [], []
    for i in range(n):
        e, f = basis[2 * i], basis[2 * i + 1]
        if rng.random() < 0.5:
            e, f = f, Matrix(-e)
        es.append(e)
        fs.append(f)
    S = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            S[i][j] = S[j][i] = rng.randint(-bound, bound)
    rows = []
    for i in range(n):
        row = es[i]
        for j in range(n):
            row = row + S[i][j] * fs[j]
        rows.append(list(row))
    return Subspace(v, as_matrix(rows, v.dim))


def random_lin_rel(src: SympSpace, dst: SympSpace, rng: random.Random) -> LinCanRel:
    return LinCanRel(src, dst, random_lagrangian(direct_sum(dual(src), dst), rng))
