"""Worked systems: the Simpson system, Higgs flag ideals and Quot points on the line."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .grasseq import grass_ideal, pluecker_name, pluecker_relations, rank1_ideal, z_names
from .grobner import (
    Ideal,
    _chart,
    _minimal_polynomial,
    affine_colength,
    ideal_member,
    ideal_subset,
    is_zero_dimensional,
    projective_degree,
)
from .higgsfield import HiggsError, HiggsField, rational_roots, validate_higgs
from .spectral import certify_radical_intersection
from .polyring import GREVLEX, LEX, Poly, PolyError, evaluate, poly_divmod


class SystemError_(PolyError):
    pass


# ---------------------------------------------------------------------------
# Simpson system


def simpson_system(n: int) -> HiggsField:
    """Rank n+1 field on affine n-space with phi_h = E_{1,h+1}."""
    if n < 1:
        raise SystemError_("the Simpson system needs n >= 1")
    base = tuple(f"x{i}" for i in range(1, n + 1))
    r = n + 1
    mats = []
    for h in range(1, n + 1):
        m = [[Poly.zero(base) for _ in range(r)] for _ in range(r)]
        m[0][h] = Poly.const(base, 1)
        mats.append(m)
    return validate_higgs(mats, base)


@dataclass(frozen=True)
class SimpsonReport:
    n: int
    d: int
    ideal: Ideal
    radical: Ideal
    certified: bool
    powers: Tuple[int, ...]  # exponent needed for each linear generator


def simpson_grass_check(n: int, d: int, max_power: int = 4) -> SimpsonReport:
    """Certify that the d-th Higgs Grassmannian of the Simpson system has the Schubert radical."""
    if not 1 <= d <= n:
        raise SystemError_(f"d must lie in 1..{n}, got {d}")
    H = simpson_system(n)
    G = grass_ideal(H, d, include_pluecker_relations=d >= 2)
    I = G.ideal
    vars = I.vars
    r = n + 1
    if d == 1:
        linear = [Poly.var(vars, f"z{k}") for k in range(2, r + 1)]
        extra: List[Poly] = []
    else:
        from itertools import combinations

        linear = [Poly.var(vars, pluecker_name(K, r)) for K in combinations(range(2, r + 1), d)]
        extra = pluecker_relations(r, d, vars)
    P = Ideal(vars, linear + extra, GREVLEX)
    contained = ideal_subset(I, P)
    powers = []
    for g in linear:
        p, k = g, 1
        while k <= max_power and not ideal_member(p, I):
            p, k = p * g, k + 1
        powers.append(k if k <= max_power else 0)
    extras_in = all(ideal_member(g, I) for g in extra)
    certified = contained and extras_in and all(powers)
    return SimpsonReport(n, d, I, P, certified, tuple(powers))


# ---------------------------------------------------------------------------
# flag ideals


@dataclass(frozen=True)
class FlagIdeal:
    ideal: Ideal
    I1: Ideal
    I2: Ideal
    f: Poly
    base_vars: Tuple[str, ...]
    z_vars: Tuple[str, ...]
    y_vars: Tuple[str, ...]


def flag_ideal(H: HiggsField) -> FlagIdeal:
    """I1 (lines, z) + I2 (planes, dual y coordinates) + (sum y_i z_i) for rank 3 on a curve."""
    if H.r != 3 or H.n != 1:
        raise HiggsError("flag ideals are assembled for rank 3 on a curve")
    zs, ys = z_names(3), z_names(3, "y")
    vars = H.base_vars + zs + ys
    I1 = rank1_ideal(H).ideal.to_vars(vars)
    I2 = rank1_ideal(H.transpose(), stem="y").ideal.to_vars(vars)
    f = Poly.zero(vars)
    for z, y in zip(zs, ys):
        f = f + Poly.var(vars, z) * Poly.var(vars, y)
    total = Ideal(vars, list(I1.gens) + list(I2.gens) + [f], GREVLEX)
    return FlagIdeal(total, I1, I2, f, H.base_vars, zs, ys)


def flag_fiber(F: FlagIdeal, point: Sequence) -> Ideal:
    if len(point) != len(F.base_vars):
        raise PolyError("point length does not match the base")
    bindings = {v: Fraction(x) for v, x in zip(F.base_vars, point)}
    vars = F.z_vars + F.y_vars
    return Ideal(vars, [evaluate(g, bindings) for g in F.ideal.gens], GREVLEX)


def _rational_points(I: Ideal) -> Optional[List[Tuple[Fraction, ...]]]:
    """All points of a zero-dimensional ideal if they are rational, else None."""
    if I.is_unit():
        return []
    v, rest = I.vars[0], I.vars[1:]
    g = _minimal_polynomial(I, v)
    i = I.vars.index(v)
    coeffs = [Fraction(0)] * (g.total_degree() + 1)
    for e, c in g.terms.items():
        coeffs[e[i]] = c
    roots, leftover = rational_roots(coeffs)
    if len(leftover) > 1:
        return None
    if not rest:
        return [(a,) for a, _ in roots]
    out = []
    for a, _ in roots:
        sub = Ideal(rest, [evaluate(h, {v: a}) for h in I.gens], I.order)
        pts = _rational_points(sub)
        if pts is None:
            return None
        out.extend((a,) + p for p in pts)
    return out


def certified_point_count(I: Ideal, groups: Sequence[Sequence[str]], length: int, seed: int = 0,
                          attempts: int = 5) -> Optional[int]:
    """Number of support points, backed by a radical certificate; None when unavailable.

    In a random affine chart of full length the points are found exactly and
    √I = ∩ (point ideals) is certified with bounded powers.  Irrational
    points or a failed certificate give None.
    """
    rng = random.Random(seed)
    for _ in range(attempts):
        C = _chart(I, groups, rng)
        if not is_zero_dimensional(C) or affine_colength(C) != length:
            continue  # the chart misses part of the scheme
        pts = _rational_points(C)
        if pts is None:
            return None
        primes = [Ideal(C.vars, [Poly.var(C.vars, v) - a for v, a in zip(C.vars, p)], C.order) for p in pts]
        ok, _ = certify_radical_intersection(C, primes, max_power=length)
        return len(pts) if ok else None
    return None


def flag_fiber_report(F: FlagIdeal, point: Sequence, seed: int = 0) -> Dict[str, Optional[int]]:
    """Bihomogeneous length of the fiber and its certified number of points (None if unknown)."""
    fiber = flag_fiber(F, point)
    groups = [list(F.z_vars), list(F.y_vars)]
    length = projective_degree(fiber, groups, seed=seed)
    points = certified_point_count(fiber, groups, length, seed=seed)
    return {"length": length, "point_count": points}


def flag_case_matrix(case: str, alpha=1, beta=1, gamma=2) -> List[List[int]]:
    if case == "A":
        return [[0, 1, 0], [0, 0, 1], [0, 0, 0]]
    if case == "B":
        return [[0, 1, 0], [0, 0, 0], [0, 0, alpha]]
    if case == "C":
        return [[0, 0, 0], [0, beta, 0], [0, 0, gamma]]
    raise SystemError_(f"unknown flag case {case!r}")


# ---------------------------------------------------------------------------
# Quot points for the Simpson system on the line


@dataclass(frozen=True)
class QuotPoint:
    p1: Poly
    p2: Poly
    q: Poly
    invariant: bool
    colength: int

    @property
    def phi_pair(self) -> Tuple[Poly, Poly]:
        return self.p1, self.q


def _deg(p: Poly) -> int:
    return p.total_degree()


def _univariate(M) -> Tuple[str, ...]:
    vars = M[0][0].vars
    if len(vars) != 1:
        raise SystemError_("Quot computations need a univariate base ring")
    return vars


def hermite_2xk(cols: Sequence[Tuple[Poly, Poly]]) -> Tuple[Poly, Poly, Poly]:
    """Canonical column form (g, p; 0, q) of a rank-2 2 x k matrix given by its columns.

    g and q are monic and deg p < deg g (p = 0 when g is constant).
    """
    cols = [(a, b) for a, b in cols]
    vars = cols[0][0].vars
    zero = Poly.zero(vars)
    # column Euclid on the second row
    lead: Optional[Tuple[Poly, Poly]] = None
    rest: List[Poly] = []
    pending = list(cols)
    while pending:
        a, b = pending.pop()
        if not b:
            rest.append(a)
            continue
        if lead is None:
            lead = (a, b)
            continue
        la, lb = lead
        while b:
            if _deg(b) < _deg(lb):
                la, lb, a, b = a, b, la, lb
            quo, rem = poly_divmod(b, lb, LEX)
            a, b = a - quo * la, rem
        rest.append(a)
        lead = (la, lb)
    if lead is None:
        raise SystemError_("matrix does not have rank 2")
    g = zero
    for a in rest:
        g = _gcd1(g, a)
    if not g:
        raise SystemError_("matrix does not have rank 2")
    p, q = lead
    c = q.leading_coefficient()
    p, q = p * (1 / c), q * (1 / c)
    g = g.monic()
    p = poly_divmod(p, g, LEX)[1]
    return g, p, q


def _gcd1(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b, LEX)[1]
    return a.monic() if a else a


def quot_canonicalize(M) -> QuotPoint:
    """Canonical generators f = p1 e1, g = p2 e1 + q e2 of the column span of M."""
    vars = _univariate(M)
    det = M[0][0] * M[1][1] - M[0][1] * M[1][0]
    if not det:
        raise SystemError_("singular matrix: the submodule does not have rank 2")
    p1, p2, q = hermite_2xk([(M[0][0], M[1][0]), (M[0][1], M[1][1])])
    invariant = not poly_divmod(q, p1, LEX)[1]
    return QuotPoint(p1, p2, q, invariant, _deg(p1) + _deg(q))


def quot_invariance_oracle(M) -> bool:
    """phi(K) ⊆ K decided by comparing canonical forms of [M | phi M] and M."""
    _univariate(M)
    cols = [(M[0][0], M[1][0]), (M[0][1], M[1][1])]
    phi_cols = [(b, Poly.zero(b.vars)) for _, b in cols]
    return hermite_2xk(cols + phi_cols) == hermite_2xk(cols)


def quot_types(d: int, var: str = "x") -> List[Tuple[int, int]]:
    """Invariant canonical types (deg p1, deg q) realized with colength d."""
    vars = (var,)
    x = Poly.var(vars, var)
    out = []
    for a in range(d + 1):
        b = d - a
        zero = Poly.zero(vars)
        pt = quot_canonicalize([[x ** a, zero], [zero, x ** b]])
        if pt.invariant:
            out.append((_deg(pt.p1), _deg(pt.q)))
    return sorted(set(out))
