"""Discriminant analysis of rank-2 Higgs fields and their rank-1 Grassmannians."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional

from .grasseq import rank1_generator, z_names
from .grobner import Ideal, ideal_intersect, saturate
from .higgsfield import HiggsError, HiggsField
from .polyring import GREVLEX, Poly, differentiate, divide_exact, gcd_list, poly_square_root

TAGS = ("center", "vertical", "split-degenerate", "nonreduced", "reducible-square", "irreducible")


@dataclass(frozen=True)
class Rank2Class:
    tag: str
    delta: Poly
    which: Optional[int] = None  # 0-based index of the matrix used
    generator: Optional[Poly] = None  # rank-1 equation over (z1, z2, base)
    gcd: Optional[Poly] = None
    sqrt: Optional[Poly] = None
    factors: List[Poly] = field(default_factory=list)


def _check_rank2(H: HiggsField) -> None:
    if H.r != 2:
        raise HiggsError(f"rank-2 analysis needs r = 2, got r = {H.r}")


def _psi(H: HiggsField, h: int):
    m = H.matrix(h)
    a11 = m[0][0]
    return m[0][1], m[1][0], m[1][1] - a11  # psi12, psi21, psi22


def discriminant(H: HiggsField, which: int = 0) -> Poly:
    """(phi22 - phi11)^2 + 4 phi12 phi21 of the matrix ``which`` (0-based)."""
    _check_rank2(H)
    p12, p21, p22 = _psi(H, which)
    return p22 * p22 + 4 * p12 * p21


def _is_central(H: HiggsField, h: int) -> bool:
    p12, p21, p22 = _psi(H, h)
    return not (p12 or p21 or p22)


def _fiber_vars(H: HiggsField):
    return H.base_vars + z_names(2)


def _generator(H: HiggsField, h: int) -> Poly:
    vars = _fiber_vars(H)
    z = [Poly.var(vars, v) for v in z_names(2)]
    return rank1_generator(H.over(vars)[h], 0, 1, z)


def _primitive_in_z(p: Poly) -> Poly:
    """Divide a form in z1, z2 by the gcd of its coefficients (polynomials in the base)."""
    k = len(p.vars) - 2
    coeffs = {}
    for e, c in p.terms.items():
        coeffs.setdefault(e[k:], {})[e[:k] + (0, 0)] = c
    g = gcd_list([Poly(p.vars, t) for t in coeffs.values()])
    return divide_exact(p, g).monic(GREVLEX)


def classify_rank2(H: HiggsField) -> Rank2Class:
    _check_rank2(H)
    nonc = [h for h in range(H.n) if not _is_central(H, h)]
    if not nonc:
        return Rank2Class("center", Poly.zero(H.base_vars))
    h = nonc[0]
    delta = discriminant(H, h)
    p12, p21, p22 = _psi(H, h)
    gen = _generator(H, h)
    g = gcd_list([p12, p21, p22])
    if not g.is_constant():
        return Rank2Class("vertical", delta, h, gen, gcd=g)
    vars = gen.vars
    z1, z2 = Poly.var(vars, "z1"), Poly.var(vars, "z2")
    a, b, c = (q.to_vars(vars) for q in (p21, p22, p12))  # gen = a z1^2 + b z1 z2 - c z2^2
    if not delta:
        root = 2 * a * z1 + b * z2 if a else z2
        return Rank2Class("nonreduced", delta, h, gen, g, Poly.zero(H.base_vars), [_primitive_in_z(root)])
    if not (p12 * p21):
        if not c:
            factors = [z1, a * z1 + b * z2]
        else:
            factors = [z2, b * z1 - c * z2]
        return Rank2Class("split-degenerate", delta, h, gen, g, factors=[_primitive_in_z(f) for f in factors])
    s = poly_square_root(delta)
    if s is not None:
        sz = s.to_vars(vars)
        factors = [_primitive_in_z(2 * a * z1 + (b + sz) * z2), _primitive_in_z(2 * a * z1 + (b - sz) * z2)]
        return Rank2Class("reducible-square", delta, h, gen, g, s, factors)
    return Rank2Class("irreducible", delta, h, gen, g)


def singular_locus_rank2(H: HiggsField, which: Optional[int] = None) -> Ideal:
    """Singular locus of the rank-1 Higgs Grassmannian of an irreducible field on a curve.

    The ideal of the equation and its partial derivatives, saturated with
    respect to (z1, z2) so that it is independent of the chart.
    """
    cls = classify_rank2(H)
    if H.n != 1:
        raise HiggsError("the singular locus is only computed over a curve (n = 1)")
    if cls.tag != "irreducible":
        raise HiggsError(f"the singular locus needs the irreducible case, got {cls.tag}")
    h = cls.which if which is None else which
    q = _generator(H, h)
    vars = q.vars
    I = Ideal(vars, [q] + [differentiate(q, v) for v in vars], GREVLEX)
    return ideal_intersect(saturate(I, Poly.var(vars, "z1")), saturate(I, Poly.var(vars, "z2")))


def fiber_generator(H: HiggsField, which: int = 0) -> Poly:
    _check_rank2(H)
    return _generator(H, which)


def generators_proportional(q1: Poly, q2: Poly, u: Poly, v: Poly) -> bool:
    """Check v*q1 - u*q2 = 0 with u, v over the base variables."""
    vars = q1.vars
    return not (v.to_vars(vars) * q1 - u.to_vars(vars) * q2)
