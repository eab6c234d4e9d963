"""Small dense-matrix helpers over polynomials and over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

from .polyring import Poly, PolyError, evaluate

PolyMatrix = List[List[Poly]]


def zeros(vars: Sequence[str], rows: int, cols: int) -> PolyMatrix:
    return [[Poly.zero(vars) for _ in range(cols)] for _ in range(rows)]


def identity(vars: Sequence[str], r: int) -> PolyMatrix:
    return [[Poly.const(vars, 1 if i == j else 0) for j in range(r)] for i in range(r)]


def const_matrix(vars: Sequence[str], rows: Sequence[Sequence]) -> PolyMatrix:
    return [[Poly.const(vars, c) for c in row] for row in rows]


def mat_mul(A: Sequence[Sequence[Poly]], B: Sequence[Sequence[Poly]]) -> PolyMatrix:
    if not A or len(A[0]) != len(B):
        raise PolyError("matrix shapes do not match for multiplication")
    vars = A[0][0].vars
    out = []
    for row in A:
        new_row = []
        for j in range(len(B[0])):
            acc = Poly.zero(vars)
            for k, a in enumerate(row):
                if a and B[k][j]:
                    acc = acc + a * B[k][j]
            new_row.append(acc)
        out.append(new_row)
    return out


def mat_add(A, B) -> PolyMatrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B) -> PolyMatrix:
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, c) -> PolyMatrix:
    return [[a * c for a in row] for row in A]


def mat_pow(A, k: int) -> PolyMatrix:
    vars = A[0][0].vars
    result = identity(vars, len(A))
    for _ in range(k):
        result = mat_mul(result, A)
    return result


def transpose(A) -> PolyMatrix:
    return [list(col) for col in zip(*A)]


def is_zero_matrix(A) -> bool:
    return all(not a for row in A for a in row)


def mat_to_vars(A, vars: Sequence[str]) -> PolyMatrix:
    return [[a.to_vars(vars) for a in row] for row in A]


def mat_evaluate(A, bindings) -> List[List[Fraction]]:
    """Evaluate every entry at a full assignment of its variables."""
    return [[evaluate(a, bindings).constant_value() for a in row] for row in A]


def jordan_block(vars: Sequence[str], lam: Poly, size: int) -> PolyMatrix:
    """Upper-triangular Jordan block: ``lam`` on the diagonal, 1 above it."""
    M = zeros(vars, size, size)
    for i in range(size):
        M[i][i] = lam
        if i + 1 < size:
            M[i][i + 1] = Poly.const(vars, 1)
    return M


def block_diagonal(vars: Sequence[str], blocks: Sequence[PolyMatrix]) -> PolyMatrix:
    r = sum(len(b) for b in blocks)
    M = zeros(vars, r, r)
    at = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, a in enumerate(row):
                M[at + i][at + j] = a
        at += len(b)
    return M


def format_matrix(A) -> List[List[str]]:
    return [[str(a) for a in row] for row in A]


# ---------------------------------------------------------------------------
# rational matrices


def rank_q(M: Sequence[Sequence[Fraction]]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    rows = [[Fraction(x) for x in row] for row in M]
    if not rows:
        return 0
    rank = 0
    cols = len(rows[0])
    for c in range(cols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][c]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c] / p
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def qmat_mul(A, B) -> List[List[Fraction]]:
    return [[sum((A[i][k] * B[k][j] for k in range(len(B))), Fraction(0)) for j in range(len(B[0]))] for i in range(len(A))]


def qmat_shift(A, lam: Fraction) -> List[List[Fraction]]:
    return [[a - (lam if i == j else 0) for j, a in enumerate(row)] for i, row in enumerate(A)]
