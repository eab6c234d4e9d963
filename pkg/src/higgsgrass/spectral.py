"""Spectral-cover ideals and radical certificates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .grobner import Ideal, affine_colength, ideal_member, ideal_subset, intersect_all
from .higgsfield import HiggsField
from .polyring import GREVLEX, Poly, PolyError, determinant, evaluate, varset


class CertificateError(PolyError):
    pass


@dataclass(frozen=True)
class SpectralIdeal:
    ideal: Ideal
    base_vars: Tuple[str, ...]
    l_vars: Tuple[str, ...]
    index: Tuple[Tuple[int, ...], ...]  # d-monomial exponent of each generator


def spectral_ideal(H: HiggsField, l_names: Optional[Sequence[str]] = None) -> SpectralIdeal:
    """Coefficients of det((sum l_i d_i) I - sum phi_i d_i) in the scaffolding variables d_i."""
    n, r = H.n, H.r
    l_vars = tuple(l_names) if l_names is not None else tuple(f"l{i}" for i in range(1, n + 1))
    if len(l_vars) != n:
        raise PolyError(f"need {n} eigenvalue coordinates, got {len(l_vars)}")
    out_vars = varset(H.base_vars + l_vars)
    taken = set(out_vars)
    d_vars = []
    k = 1
    while len(d_vars) < n:
        name = f"_d{k}"
        if name not in taken:
            d_vars.append(name)
        k += 1
    vars = out_vars + tuple(d_vars)
    ds = [Poly.var(vars, d) for d in d_vars]
    lam = Poly.zero(vars)
    for l, d in zip(l_vars, ds):
        lam = lam + Poly.var(vars, l) * d
    mats = H.over(vars)
    M = []
    for i in range(r):
        row = []
        for j in range(r):
            entry = lam if i == j else Poly.zero(vars)
            for h in range(n):
                if mats[h][i][j]:
                    entry = entry - mats[h][i][j] * ds[h]
            row.append(entry)
        M.append(row)
    det = determinant(M)
    m = len(out_vars)
    parts = {}
    for e, c in det.terms.items():
        parts.setdefault(e[m:], {})[e[:m]] = c
    index = sorted(parts, reverse=True)
    gens = [Poly(out_vars, parts[a]) for a in index]
    return SpectralIdeal(Ideal(out_vars, gens, GREVLEX), H.base_vars, l_vars, tuple(index))


def spectral_fiber_degree(S: SpectralIdeal, point: Sequence) -> int:
    """Colength of the spectral ideal restricted to a base point."""
    if len(point) != len(S.base_vars):
        raise PolyError(f"point has {len(point)} coordinates, base dimension is {len(S.base_vars)}")
    bindings = {v: Fraction(x) for v, x in zip(S.base_vars, point)}
    fiber = Ideal(S.l_vars, [evaluate(g, bindings) for g in S.ideal.gens], GREVLEX)
    return affine_colength(fiber)


def _check_linear(P: Ideal) -> None:
    for g in P.gens:
        if g.total_degree() > 1:
            raise CertificateError(f"generator {g} of the candidate radical is not linear")


def certify_radical(I: Ideal, P: Ideal, max_power: int) -> bool:
    """True when I ⊆ P and each element of the reduced basis of P has a power
    of exponent <= max_power in I.

    P is generated by linear forms, hence prime, so this certifies √I = P.
    The reduced basis of a linear ideal is its echelon form, a canonical
    generating set; powers are bounded on that set.
    """
    _check_linear(P)
    if P.vars != I.vars:
        raise PolyError("candidate radical lives over different variables")
    if not ideal_subset(I, P):
        return False
    return all(_power_in(g, I, max_power) for g in P.with_order(I.order).basis)


def _power_in(g: Poly, I: Ideal, max_power: int) -> bool:
    p = g
    for _ in range(max_power):
        if ideal_member(p, I):
            return True
        p = p * g
    return False


def certify_radical_intersection(I: Ideal, primes: Sequence[Ideal], max_power: int) -> Tuple[bool, Ideal]:
    """Certify √I = P1 ∩ ... ∩ Pk for linearly generated primes Pi.

    Returns the flag and the intersection; the check is I ⊆ ∩Pi plus a
    bounded power of every generator of ∩Pi lying in I.
    """
    for P in primes:
        _check_linear(P)
    J = intersect_all(primes)
    if not ideal_subset(I, J):
        return False, J
    return all(_power_in(g, I, max_power) for g in J.gens), J
