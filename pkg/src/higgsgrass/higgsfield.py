"""Higgs fields on affine space: n pairwise commuting r x r polynomial matrices."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd
from typing import List, Sequence, Tuple

from .matrices import (
    identity,
    is_zero_matrix,
    mat_add,
    mat_evaluate,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_to_vars,
    qmat_mul,
    qmat_shift,
    rank_q,
)
from .polyring import Poly, PolyError, char_poly, varset


class HiggsError(PolyError):
    pass


class CommutatorNonzero(HiggsError):
    def __init__(self, h: int, h2: int, i: int, j: int, entry: Poly):
        super().__init__(
            f"matrices {h} and {h2} do not commute: commutator entry ({i}, {j}) is {entry}"
        )
        self.pair = (h, h2)
        self.entry = (i, j, entry)


class IrrationalEigenvalue(HiggsError):
    def __init__(self, factor: Poly):
        super().__init__(f"characteristic polynomial has the factor {factor} without rational roots")
        self.factor = factor


@dataclass(frozen=True)
class HiggsField:
    n: int
    r: int
    base_vars: Tuple[str, ...]
    matrices: Tuple[Tuple[Tuple[Poly, ...], ...], ...]

    def matrix(self, h: int) -> List[List[Poly]]:
        """The h-th matrix (0-based) as a mutable list of rows."""
        return [list(row) for row in self.matrices[h]]

    def over(self, vars: Sequence[str]) -> List[List[List[Poly]]]:
        """All matrices re-expressed over a larger variable set."""
        return [mat_to_vars(self.matrix(h), vars) for h in range(self.n)]

    def transpose(self) -> "HiggsField":
        mats = [[list(col) for col in zip(*m)] for m in self.matrices]
        return _build(self.base_vars, mats)


def _build(base_vars, matrices) -> HiggsField:
    r = len(matrices[0])
    return HiggsField(
        len(matrices), r, tuple(base_vars), tuple(tuple(tuple(row) for row in m) for m in matrices)
    )


def commutator(A, B):
    return mat_sub(mat_mul(A, B), mat_mul(B, A))


def wedge_components(matrices) -> dict:
    """Coefficients of phi ∧ phi on dx_h ∧ dx_h' for h < h' (0-based keys)."""
    out = {}
    for h in range(len(matrices)):
        for h2 in range(h + 1, len(matrices)):
            out[(h, h2)] = commutator(matrices[h], matrices[h2])
    return out


def validate_higgs(matrices, base_vars: Sequence[str]) -> HiggsField:
    """Check shapes, variables and the integrability condition."""
    base_vars = varset(base_vars)
    if not matrices:
        raise HiggsError("a Higgs field needs at least one matrix")
    r = len(matrices[0])
    if r < 1:
        raise HiggsError("rank must be at least 1")
    for h, m in enumerate(matrices):
        if len(m) != r or any(len(row) != r for row in m):
            raise HiggsError(f"matrix {h + 1} is not {r} x {r}")
        for row in m:
            for a in row:
                if a.vars != base_vars:
                    raise HiggsError(f"matrix {h + 1} has an entry over {a.vars}, expected {base_vars}")
    for (h, h2), c in wedge_components(matrices).items():
        for i, row in enumerate(c):
            for j, a in enumerate(row):
                if a:
                    raise CommutatorNonzero(h + 1, h2 + 1, i + 1, j + 1, a)
    return _build(base_vars, matrices)


def normalize_trace(H: HiggsField, eta: Sequence[Poly]) -> HiggsField:
    """Replace each matrix by phi_h - eta_h * I."""
    if len(eta) != H.n:
        raise HiggsError(f"expected {H.n} shifts, got {len(eta)}")
    mats = []
    for h in range(H.n):
        m = H.matrix(h)
        e = eta[h]
        mats.append([[a - e if i == j else a for j, a in enumerate(row)] for i, row in enumerate(m)])
    return validate_higgs(mats, H.base_vars)


# ---------------------------------------------------------------------------
# Toeplitz commutant of a single Jordan block


@dataclass(frozen=True)
class ToeplitzWitness:
    mu: Tuple[Poly, ...]
    lam: Poly
    b: Tuple[Poly, ...]  # Taylor coefficients at lam: T = sum b_k (A - lam)^k

    @property
    def derivative_at_lambda(self) -> Poly:
        return self.b[1] if len(self.b) > 1 else Poly.zero(self.lam.vars)

    @property
    def derivative_zero(self) -> bool:
        return not self.derivative_at_lambda


def _single_block_eigenvalue(A) -> Poly:
    r = len(A)
    lam = A[0][0]
    for i in range(r):
        for j in range(r):
            want = lam if i == j else (1 if j == i + 1 else 0)
            if A[i][j] != want:
                raise HiggsError("matrix is not a single upper-triangular Jordan block")
    return lam


def toeplitz_decompose(A, T) -> ToeplitzWitness:
    """Write a matrix commuting with a Jordan block as a polynomial in it."""
    lam = _single_block_eigenvalue(A)
    r = len(A)
    if len(T) != r or any(len(row) != r for row in T):
        raise HiggsError("shape mismatch")
    if not is_zero_matrix(commutator(A, T)):
        raise HiggsError("T does not commute with A")
    b = [T[0][k] for k in range(r)]
    for i in range(r):
        for j in range(r):
            want = b[j - i] if j >= i else 0
            if T[i][j] != want:
                raise HiggsError("T is not upper-triangular Toeplitz")
    mu = []
    for k in range(r):
        acc = Poly.zero(lam.vars)
        for i in range(k, r):
            if b[i]:
                acc = acc + b[i] * comb(i, k) * (-lam) ** (i - k)
        mu.append(acc)
    # reconstruction check
    vars = lam.vars
    acc = [[Poly.zero(vars)] * r for _ in range(r)]
    power = identity(vars, r)
    for k in range(r):
        acc = mat_add(acc, mat_scale(power, mu[k]))
        power = mat_mul(power, A)
    if acc != [list(row) for row in T]:
        raise AssertionError("Toeplitz reconstruction failed")
    return ToeplitzWitness(tuple(mu), lam, tuple(b))


def polynomial_in(A, mu: Sequence[Poly]):
    """sum mu_k A^k."""
    vars = A[0][0].vars
    r = len(A)
    acc = [[Poly.zero(vars)] * r for _ in range(r)]
    power = identity(vars, r)
    for c in mu:
        acc = mat_add(acc, mat_scale(power, c))
        power = mat_mul(power, A)
    return acc


# ---------------------------------------------------------------------------
# Jordan type at a rational point


@dataclass(frozen=True)
class JordanType:
    blocks: Tuple[Tuple[Fraction, int, int], ...]  # (eigenvalue, size, multiplicity)

    @property
    def rank(self) -> int:
        return sum(s * m for _, s, m in self.blocks)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


def rational_roots(coeffs: Sequence[Fraction]) -> Tuple[List[Tuple[Fraction, int]], List[Fraction]]:
    """Rational roots with multiplicity of sum coeffs[k] t^k; also the leftover cofactor."""
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    roots: List[Tuple[Fraction, int]] = []
    zero_mult = 0
    while len(c) > 1 and c[0] == 0:
        c.pop(0)
        zero_mult += 1
    if zero_mult:
        roots.append((Fraction(0), zero_mult))
    if len(c) <= 1:
        return roots, c
    den = 1
    for x in c:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in c]
    candidates = set()
    for p in _divisors(ints[0]):
        for q in _divisors(ints[-1]):
            candidates.add(Fraction(p, q))
            candidates.add(Fraction(-p, q))
    for root in sorted(candidates):
        mult = 0
        while len(c) > 1:
            # synthetic division by (t - root)
            out = [Fraction(0)] * (len(c) - 1)
            acc = Fraction(0)
            for k in range(len(c) - 1, 0, -1):
                acc = acc * root + c[k]
                out[k - 1] = acc
            if acc * root + c[0] != 0:
                break
            c = out
            mult += 1
        if mult:
            roots.append((root, mult))
    return roots, c


def jordan_type_at_point(H: HiggsField, which: int, point: Sequence) -> JordanType:
    """Jordan type of the matrix ``which`` (0-based) evaluated at ``point``."""
    if len(point) != H.n:
        raise HiggsError(f"point has {len(point)} coordinates, base dimension is {H.n}")
    if not 0 <= which < H.n:
        raise HiggsError(f"matrix index {which} out of range")
    bindings = {v: Fraction(x) for v, x in zip(H.base_vars, point)}
    M = mat_evaluate(H.matrix(which), bindings)
    return jordan_type_of(M)


def jordan_type_of(M: Sequence[Sequence[Fraction]]) -> JordanType:
    r = len(M)
    entries = [[Poly.const((), x) for x in row] for row in M]
    cp = char_poly(entries, "t")
    coeffs = [Fraction(0)] * (r + 1)
    for e, c in cp.terms.items():
        coeffs[e[0]] = c
    roots, rest = rational_roots(coeffs)
    if len(rest) > 1:
        factor = Poly(("t",), {(k,): c for k, c in enumerate(rest)}).monic()
        raise IrrationalEigenvalue(factor)
    blocks = []
    for lam, mult in roots:
        shifted = qmat_shift(M, lam)
        ranks = [r]
        power = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
        for _ in range(mult + 1):
            power = qmat_mul(power, shifted)
            ranks.append(rank_q(power))
        at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
        for size in range(1, len(at_least) + 1):
            exact = at_least[size - 1] - (at_least[size] if size < len(at_least) else 0)
            if exact:
                blocks.append((lam, size, exact))
    blocks.sort(key=lambda b: (-b[0], -b[1]))
    jt = JordanType(tuple(blocks))
    assert jt.rank == r
    return jt


# ---------------------------------------------------------------------------
# rank-2 proportionality


def proportionality_2x2(U, V) -> Tuple[Poly, Poly]:
    """Return (u, v) with v*U = u*V for commuting 2x2 matrices with zero (1,1) entry."""
    for M, name in ((U, "U"), (V, "V")):
        if len(M) != 2 or any(len(row) != 2 for row in M):
            raise HiggsError(f"{name} is not 2 x 2")
        if M[0][0]:
            raise HiggsError(f"{name} has a nonzero (1,1) entry")
        if is_zero_matrix(M):
            raise HiggsError(f"{name} is the zero matrix")
    if not is_zero_matrix(commutator(U, V)):
        raise HiggsError("U and V do not commute")
    for i, j in ((1, 0), (0, 1), (1, 1)):
        if U[i][j] or V[i][j]:
            u, v = U[i][j], V[i][j]
            break
    if not is_zero_matrix(mat_sub(mat_scale(U, v), mat_scale(V, u))):
        raise HiggsError("U and V are not proportional")
    return u, v


def det2(M) -> Poly:
    return M[0][0] * M[1][1] - M[0][1] * M[1][0]
