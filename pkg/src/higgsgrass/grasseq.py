"""Defining equations of Higgs Grassmannians inside the Grassmann bundle.

Rank-1 subbundles use vertical homogeneous coordinates z1..zr; rank-d
subbundles use Pluecker coordinates p_K indexed by sorted d-subsets K.
Variable order is the base variables first, then the fiber coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .grobner import Ideal
from .higgsfield import HiggsField
from .polyring import GREVLEX, Poly, PolyError, evaluate


@dataclass(frozen=True)
class GrassIdeal:
    ideal: Ideal
    d: int
    kind: str  # "vertical" or "pluecker"
    include_pluecker_relations: bool
    fiber_vars: Tuple[str, ...]
    base_vars: Tuple[str, ...]
    raw_count: int  # generators emitted before zero-dropping


class FiberFirstOrder:
    """Display order: grevlex on the fiber block, ties broken by grevlex on the base."""

    def __init__(self, n_base: int):
        self.n_base = n_base

    def key(self, e):
        k = self.n_base
        return GREVLEX.key(e[k:]) + GREVLEX.key(e[:k])


def z_names(r: int, stem: str = "z") -> Tuple[str, ...]:
    return tuple(f"{stem}{i}" for i in range(1, r + 1))


def pluecker_name(K: Sequence[int], r: int) -> str:
    if r >= 10:
        return "p_" + "_".join(str(k) for k in K)
    return "p_" + "".join(str(k) for k in K)


def pluecker_subsets(r: int, d: int) -> List[Tuple[int, ...]]:
    return list(combinations(range(1, r + 1), d))


def pluecker_names(r: int, d: int) -> Tuple[str, ...]:
    return tuple(pluecker_name(K, r) for K in pluecker_subsets(r, d))


def pluecker_sign(T: Sequence[int], i: int) -> Tuple[int, Optional[Tuple[int, ...]]]:
    """Sign and sorted index set of p_{T,i}; (0, None) when i lies in T.

    The sign is (-1)^e with e the number of elements of T smaller than i.
    """
    if i in T:
        return 0, None
    e = sum(1 for t in T if t < i)
    return (-1) ** e, tuple(sorted(tuple(T) + (i,)))


def rank1_generator(phi, i: int, j: int, z: Sequence[Poly]) -> Poly:
    """sum_k z_k (phi_jk z_i - phi_ik z_j) for 0-based i, j."""
    r = len(phi)
    acc = Poly.zero(z[0].vars)
    for k in range(r):
        c = phi[j][k] * z[i] - phi[i][k] * z[j]
        if c:
            acc = acc + z[k] * c
    return acc


def rank1_ideal(H: HiggsField, stem: str = "z") -> GrassIdeal:
    fiber = z_names(H.r, stem)
    if set(fiber) & set(H.base_vars):
        raise PolyError("fiber variable names collide with base variables")
    vars = H.base_vars + fiber
    z = [Poly.var(vars, v) for v in fiber]
    gens = []
    for phi in H.over(vars):
        for i, j in combinations(range(H.r), 2):
            gens.append(rank1_generator(phi, i, j, z))
    return GrassIdeal(Ideal(vars, gens, GREVLEX), 1, "vertical", False, fiber, H.base_vars, len(gens))


def pluecker_relations(r: int, d: int, vars: Sequence[str]) -> List[Poly]:
    """Quadratic Pluecker relations for d-planes in an r-space, over ``vars``."""
    out: List[Poly] = []
    seen = set()

    def p(idx: Tuple[int, ...]) -> Poly:
        if len(set(idx)) < len(idx):
            return Poly.zero(vars)
        inversions = sum(1 for a, b in combinations(idx, 2) if a > b)
        return (-1) ** inversions * Poly.var(vars, pluecker_name(tuple(sorted(idx)), r))

    for I in combinations(range(1, r + 1), d - 1):
        for J in combinations(range(1, r + 1), d + 1):
            rel = Poly.zero(vars)
            for l, j in enumerate(J):
                rest = J[:l] + J[l + 1 :]
                rel = rel + (-1) ** l * p(I + (j,)) * p(rest)
            if not rel:
                continue
            rel = rel.monic()
            if rel in seen:
                continue
            seen.add(rel)
            out.append(rel)
    return out


def rankd_ideal(H: HiggsField, d: int, include_pluecker_relations: bool = False) -> GrassIdeal:
    if not 1 <= d <= H.r - 1:
        raise PolyError(f"d must lie in 1..{H.r - 1}, got {d}")
    fiber = pluecker_names(H.r, d)
    if set(fiber) & set(H.base_vars):
        raise PolyError("Pluecker variable names collide with base variables")
    vars = H.base_vars + fiber
    pvar: Dict[Tuple[int, ...], Poly] = {
        K: Poly.var(vars, pluecker_name(K, H.r)) for K in pluecker_subsets(H.r, d)
    }

    def p_Ti(T: Tuple[int, ...], i: int) -> Optional[Poly]:
        sign, K = pluecker_sign(T, i)
        if not sign:
            return None
        return pvar[K] if sign > 0 else -pvar[K]

    gens = []
    for phi in H.over(vars):
        for K in combinations(range(1, H.r + 1), d + 1):
            for T in combinations(range(1, H.r + 1), d - 1):
                g = Poly.zero(vars)
                for u, ku in enumerate(K, start=1):
                    inner = Poly.zero(vars)
                    for i in range(1, H.r + 1):
                        entry = phi[ku - 1][i - 1]
                        if not entry:
                            continue
                        pti = p_Ti(T, i)
                        if pti is not None:
                            inner = inner + entry * pti
                    if inner:
                        rest = tuple(k for k in K if k != ku)
                        term = pvar[rest] * inner
                        g = g + term if u % 2 == 0 else g - term
                gens.append(g)
    raw = len(gens)
    if include_pluecker_relations and d >= 2:
        gens.extend(pluecker_relations(H.r, d, vars))
    return GrassIdeal(
        Ideal(vars, gens, GREVLEX), d, "pluecker", include_pluecker_relations, fiber, H.base_vars, raw
    )


def grass_ideal(H: HiggsField, d: int, include_pluecker_relations: bool = False) -> GrassIdeal:
    """Rank-1 vertical equations for d = 1, Pluecker equations otherwise."""
    if d == 1:
        return rank1_ideal(H)
    return rankd_ideal(H, d, include_pluecker_relations)


def restrict_fiber(G: GrassIdeal, point: Sequence) -> Ideal:
    """Evaluate the base variables at ``point``; the result lives over the fiber variables."""
    if len(point) != len(G.base_vars):
        raise PolyError(f"point has {len(point)} coordinates, base dimension is {len(G.base_vars)}")
    bindings = {v: Fraction(x) for v, x in zip(G.base_vars, point)}
    return Ideal(G.fiber_vars, [evaluate(g, bindings) for g in G.ideal.gens], GREVLEX)
