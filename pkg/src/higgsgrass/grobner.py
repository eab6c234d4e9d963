"""Groebner bases and the ideal operations built on them.

Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
normal selection strategy.  All arithmetic is exact over the rationals.
"""

from __future__ import annotations

import contextvars
import heapq
import itertools
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polyring import (
    GREVLEX,
    Mono,
    MonomialOrder,
    Poly,
    PolyError,
    VarSetMismatch,
    differentiate,
    elimination_order,
    gcd_multivariate,
    divide_exact,
)

DEFAULT_SPAIR_BUDGET = 200_000
DEGREE_RETRIES = 5
COEFF_RANGE = 100


class ResourceLimit(RuntimeError):
    """Raised when a Groebner computation exceeds its S-pair budget."""


class NotZeroDimensional(PolyError):
    pass


class DegreeDisagreement(PolyError):
    pass


class NotSquarefreeMonomial(PolyError):
    pass


# engine statistics, collected by callers that opt in (the CLI does)
_stats: contextvars.ContextVar[Optional[Dict[str, int]]] = contextvars.ContextVar(
    "higgsgrass_stats", default=None
)


def start_stats() -> Dict[str, int]:
    stats = {"groebner_calls": 0, "s_pairs_processed": 0, "reductions_to_zero": 0}
    _stats.set(stats)
    return stats


def _record(pairs: int, zeros: int) -> None:
    stats = _stats.get()
    if stats is not None:
        stats["groebner_calls"] += 1
        stats["s_pairs_processed"] += pairs
        stats["reductions_to_zero"] += zeros


# optional log of every computed basis, for after-the-fact certificate checks
_basis_log: contextvars.ContextVar[Optional[List[Tuple[Tuple[Poly, ...], MonomialOrder]]]] = contextvars.ContextVar(
    "higgsgrass_basis_log", default=None
)


def record_bases() -> List[Tuple[Tuple[Poly, ...], MonomialOrder]]:
    """Start logging (basis, order) for every Groebner basis computed in this context."""
    log: List[Tuple[Tuple[Poly, ...], MonomialOrder]] = []
    _basis_log.set(log)
    return log


def stop_recording() -> None:
    _basis_log.set(None)


def spair_budget() -> int:
    value = os.environ.get("HIGGSGRASS_SPAIR_BUDGET")
    if value is None:
        return DEFAULT_SPAIR_BUDGET
    try:
        budget = int(value)
    except ValueError:
        raise PolyError(f"HIGGSGRASS_SPAIR_BUDGET must be an integer, got {value!r}") from None
    if budget < 0:
        raise PolyError("HIGGSGRASS_SPAIR_BUDGET must be nonnegative")
    return budget


# ---------------------------------------------------------------------------
# reduction kernel on raw term dictionaries


class _Elem:
    """A monic basis element: leading monomial plus the remaining terms."""

    __slots__ = ("lm", "tail", "key")

    def __init__(self, terms: Dict[Mono, Fraction], order: MonomialOrder):
        lm = max(terms, key=order.key)
        c = terms[lm]
        self.lm = lm
        self.key = order.key(lm)
        if c == 1:
            self.tail = [(e, a) for e, a in terms.items() if e != lm]
        else:
            self.tail = [(e, a / c) for e, a in terms.items() if e != lm]

    def terms(self) -> Dict[Mono, Fraction]:
        d = dict(self.tail)
        d[self.lm] = Fraction(1)
        return d


def _divides(a: Mono, b: Mono) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _neg(key):
    return tuple(-v for v in key)


def _reduce(
    terms: Dict[Mono, Fraction],
    basis: Sequence[_Elem],
    order: MonomialOrder,
    full: bool = True,
) -> Dict[Mono, Fraction]:
    """Remainder of ``terms`` on division by ``basis`` (top-only when not full)."""
    f = dict(terms)
    heap = [(_neg(order.key(m)), m) for m in f]
    heapq.heapify(heap)
    rem: Dict[Mono, Fraction] = {}
    while heap:
        _, m = heapq.heappop(heap)
        c = f.pop(m, None)
        if c is None:
            continue
        g = None
        for b in basis:
            if _divides(b.lm, m):
                g = b
                break
        if g is None:
            rem[m] = c
            if not full:
                rem.update(f)
                return rem
            continue
        shift = tuple(x - y for x, y in zip(m, g.lm))
        for e, a in g.tail:
            ne = tuple(x + y for x, y in zip(e, shift))
            old = f.get(ne)
            if old is None:
                f[ne] = -c * a
                heapq.heappush(heap, (_neg(order.key(ne)), ne))
            else:
                v = old - c * a
                if v:
                    f[ne] = v
                else:
                    del f[ne]
    return rem


def _spoly(a: _Elem, b: _Elem) -> Dict[Mono, Fraction]:
    l = _lcm(a.lm, b.lm)
    sa = tuple(x - y for x, y in zip(l, a.lm))
    sb = tuple(x - y for x, y in zip(l, b.lm))
    out: Dict[Mono, Fraction] = {}
    for e, c in a.tail:
        ne = tuple(x + y for x, y in zip(e, sa))
        out[ne] = out.get(ne, 0) + c
    for e, c in b.tail:
        ne = tuple(x + y for x, y in zip(e, sb))
        out[ne] = out.get(ne, 0) - c
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------------
# Buchberger


@dataclass
class GBReport:
    basis: List[Poly]
    s_pairs_processed: int = 0
    reductions_to_zero: int = 0


def _buchberger(vars: Tuple[str, ...], gens: Sequence[Poly], order: MonomialOrder) -> GBReport:
    budget = spair_budget()
    elems: List[_Elem] = []
    active: List[int] = []
    pairs: List[Tuple[Tuple[int, ...], int, int]] = []
    lcms: Dict[Tuple[int, int], Mono] = {}
    processed = zeros = 0

    def update(h: int) -> None:
        nonlocal pairs
        lh = elems[h].lm
        cand = [(g, _lcm(elems[g].lm, lh)) for g in active]
        kept: List[Tuple[int, Mono]] = []
        for idx, (g, l) in enumerate(cand):
            if _coprime(elems[g].lm, lh):
                kept.append((g, l))
                continue
            rest = cand[idx + 1 :]
            if any(_divides(l2, l) for _, l2 in rest) or any(_divides(l2, l) for _, l2 in kept):
                continue
            kept.append((g, l))
        new_pairs = [(g, l) for g, l in kept if not _coprime(elems[g].lm, lh)]
        survivors = []
        for entry in pairs:
            _, i, j = entry
            l = lcms[(i, j)]
            if (
                _divides(lh, l)
                and _lcm(elems[i].lm, lh) != l
                and _lcm(elems[j].lm, lh) != l
            ):
                continue
            survivors.append(entry)
        for g, l in new_pairs:
            lcms[(g, h)] = l
            survivors.append((order.key(l), g, h))
        heapq.heapify(survivors)
        pairs = survivors
        active[:] = [g for g in active if not _divides(lh, elems[g].lm)] + [h]

    def insert(terms: Dict[Mono, Fraction]) -> None:
        elems.append(_Elem(terms, order))
        update(len(elems) - 1)

    # seed with interreduced input, smallest leading terms first
    start = [g.terms for g in gens if g]
    start.sort(key=lambda t: order.key(max(t, key=order.key)))
    for t in start:
        r = _reduce(t, [elems[i] for i in active], order)
        if r:
            insert(r)

    while pairs:
        _, i, j = heapq.heappop(pairs)
        processed += 1
        if processed > budget:
            raise ResourceLimit(
                f"S-pair budget of {budget} exceeded; raise HIGGSGRASS_SPAIR_BUDGET to continue"
            )
        s = _spoly(elems[i], elems[j])
        r = _reduce(s, [elems[k] for k in active], order) if s else {}
        if not r:
            zeros += 1
            continue
        insert(r)

    basis = _interreduce([elems[i] for i in active], order)
    polys = [Poly(vars, b.terms()) for b in basis]
    polys.sort(key=lambda p: order.key(p.lead(order)[0]))
    _record(processed, zeros)
    log = _basis_log.get()
    if log is not None:
        log.append((tuple(polys), order))
    return GBReport(polys, processed, zeros)


def _interreduce(elems: List[_Elem], order: MonomialOrder) -> List[_Elem]:
    minimal = [
        e
        for i, e in enumerate(elems)
        if not any(j != i and _divides(o.lm, e.lm) and (o.lm != e.lm or j < i) for j, o in enumerate(elems))
    ]
    out = []
    for i, e in enumerate(minimal):
        others = [o for j, o in enumerate(minimal) if j != i]
        tail = _reduce(dict(e.tail), others, order)
        tail[e.lm] = Fraction(1)
        out.append(_Elem(tail, order))
    return out


# ---------------------------------------------------------------------------
# ideals


class Ideal:
    """An ideal given by generators over a variable set with a monomial order."""

    def __init__(self, vars: Sequence[str], gens: Iterable[Poly], order: MonomialOrder = GREVLEX):
        self.vars = tuple(vars)
        self.order = order
        kept = []
        for g in gens:
            if g.vars != self.vars:
                raise VarSetMismatch(f"generator over {g.vars}, ideal over {self.vars}")
            if g:
                kept.append(g)
        self.gens: Tuple[Poly, ...] = tuple(kept)
        self._report: Optional[GBReport] = None

    def __repr__(self):
        return f"Ideal({[str(g) for g in self.gens]}, vars={self.vars}, order={self.order})"

    def with_order(self, order: MonomialOrder) -> "Ideal":
        if order == self.order:
            return self
        return Ideal(self.vars, self.gens, order)

    def to_vars(self, vars: Sequence[str], order: Optional[MonomialOrder] = None) -> "Ideal":
        return Ideal(vars, [g.to_vars(vars) for g in self.gens], order or self.order)

    def groebner(self) -> GBReport:
        if self._report is None:
            self._report = _buchberger(self.vars, self.gens, self.order)
        return self._report

    @property
    def basis(self) -> List[Poly]:
        return self.groebner().basis

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def is_zero(self) -> bool:
        return not self.gens

    def __add__(self, other: "Ideal") -> "Ideal":
        _same_vars(self, other)
        return Ideal(self.vars, self.gens + other.gens, self.order)

    def __mul__(self, other: "Ideal") -> "Ideal":
        _same_vars(self, other)
        return Ideal(self.vars, [a * b for a in self.gens for b in other.gens], self.order)

    def __contains__(self, p: Poly) -> bool:
        return ideal_member(p, self)


def _same_vars(I: Ideal, J: Ideal) -> None:
    if I.vars != J.vars:
        raise VarSetMismatch(f"variable sets differ: {I.vars} vs {J.vars}")


def _fresh(vars: Sequence[str], stem: str) -> str:
    taken = set(vars)
    for k in itertools.count():
        name = f"_{stem}{k}"
        if name not in taken:
            return name
    raise AssertionError("unreachable")


def groebner_basis(I: Ideal) -> GBReport:
    return I.groebner()


def _elems(I: Ideal) -> List[_Elem]:
    return [_Elem(g.terms, I.order) for g in I.basis]


def normal_form(p: Poly, I: Ideal) -> Poly:
    if p.vars != I.vars:
        raise VarSetMismatch(f"polynomial over {p.vars}, ideal over {I.vars}")
    return Poly(I.vars, _reduce(p.terms, _elems(I), I.order))


def ideal_member(p: Poly, I: Ideal) -> bool:
    return not normal_form(p, I)


def ideal_subset(I: Ideal, J: Ideal) -> bool:
    """True when every generator of ``I`` lies in ``J``."""
    _same_vars(I, J)
    basis = _elems(J)
    return all(not _reduce(g.terms, basis, J.order) for g in I.gens)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    """Compare reduced Groebner bases under the order of ``I``."""
    _same_vars(I, J)
    J = J.with_order(I.order)
    return [g.terms for g in I.basis] == [g.terms for g in J.basis]


def eliminate(I: Ideal, names: Sequence[str]) -> Ideal:
    """Intersection of ``I`` with the subring in the variables not in ``names``."""
    drop = set(names)
    front = [v for v in I.vars if v in drop]
    back = [v for v in I.vars if v not in drop]
    if len(front) != len(drop):
        missing = drop - set(I.vars)
        raise PolyError(f"cannot eliminate unknown variables {sorted(missing)}")
    vars = tuple(front + back)
    J = Ideal(vars, [g.to_vars(vars) for g in I.gens], elimination_order(len(front)))
    kept = [g for g in J.basis if not any(e[i] for e in g.terms for i in range(len(front)))]
    return Ideal(tuple(back), [g.to_vars(back) for g in kept], I.order)


def ideal_intersect(I: Ideal, J: Ideal) -> Ideal:
    """Generators of I ∩ J from t·I + (1 - t)·J with t eliminated."""
    _same_vars(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.vars, [], I.order)
    t = _fresh(I.vars, "t")
    vars = (t,) + I.vars
    tp = Poly.var(vars, t)
    gens = [tp * g.to_vars(vars) for g in I.gens] + [(1 - tp) * g.to_vars(vars) for g in J.gens]
    K = Ideal(vars, gens, elimination_order(1))
    kept = [g for g in K.basis if not any(e[0] for e in g.terms)]
    return Ideal(I.vars, [g.to_vars(I.vars) for g in kept], I.order)


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise PolyError("intersection of no ideals")
    result = ideals[0]
    for J in ideals[1:]:
        result = ideal_intersect(result, J)
    return result


def saturate(I: Ideal, f: Poly) -> Ideal:
    """I : f^∞, via elimination of w from I + (1 - w f)."""
    if f.vars != I.vars:
        raise VarSetMismatch(f"polynomial over {f.vars}, ideal over {I.vars}")
    w = _fresh(I.vars, "w")
    vars = (w,) + I.vars
    wp = Poly.var(vars, w)
    gens = [g.to_vars(vars) for g in I.gens] + [1 - wp * f.to_vars(vars)]
    K = Ideal(vars, gens, elimination_order(1))
    kept = [g for g in K.basis if not any(e[0] for e in g.terms)]
    return Ideal(I.vars, [g.to_vars(I.vars) for g in kept], I.order)


def radical_member(p: Poly, I: Ideal) -> bool:
    """Rabinowitsch: p ∈ √I iff 1 ∈ I + (1 - w p)."""
    if p.vars != I.vars:
        raise VarSetMismatch(f"polynomial over {p.vars}, ideal over {I.vars}")
    if not p:
        return True
    w = _fresh(I.vars, "w")
    vars = I.vars + (w,)
    wp = Poly.var(vars, w)
    gens = [g.to_vars(vars) for g in I.gens] + [1 - wp * p.to_vars(vars)]
    return Ideal(vars, gens, GREVLEX).is_unit()


# ---------------------------------------------------------------------------
# zero-dimensional ideals


def _standard_monomials(vars_count: int, lms: Sequence[Mono]) -> List[Mono]:
    bounds = [None] * vars_count
    for m in lms:
        support = [i for i, x in enumerate(m) if x]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
        elif not support:
            return []
    if any(b is None for b in bounds):
        raise NotZeroDimensional("ideal is not zero-dimensional (infinite colength)")
    out: List[Mono] = []

    def walk(i: int, prefix: List[int]) -> None:
        if i == vars_count:
            out.append(tuple(prefix))
            return
        for k in range(bounds[i]):
            prefix.append(k)
            # prune as soon as a leading monomial divides the partial vector
            probe = tuple(prefix) + (0,) * (vars_count - i - 1)
            if any(_divides(m, probe) for m in lms):
                prefix.pop()
                break
            walk(i + 1, prefix)
            prefix.pop()

    walk(0, [])
    return out


def standard_monomials(I: Ideal) -> List[Mono]:
    return _standard_monomials(len(I.vars), [g.lead(I.order)[0] for g in I.basis])


def affine_colength(I: Ideal) -> int:
    """Vector-space dimension of k[vars]/I; raises for infinite colength."""
    return len(standard_monomials(I))


def is_zero_dimensional(I: Ideal) -> bool:
    try:
        standard_monomials(I)
    except NotZeroDimensional:
        return False
    return True


def _minimal_polynomial(I: Ideal, var: str) -> Poly:
    """Minimal polynomial of ``var`` acting on k[vars]/I (zero-dimensional I)."""
    n = affine_colength(I)
    x = Poly.var(I.vars, var)
    rows: List[Tuple[Dict[Mono, Fraction], Dict[int, Fraction]]] = []
    pivots: Dict[Mono, int] = {}
    power = Poly.const(I.vars, 1)
    i = I.vars.index(var)
    for k in range(n + 1):
        vec = dict(normal_form(power, I).terms)
        combo = {k: Fraction(1)}
        # eliminate against earlier rows
        changed = True
        while changed:
            changed = False
            for m, idx in pivots.items():
                c = vec.get(m)
                if c:
                    rv, rc = rows[idx]
                    for e, a in rv.items():
                        v = vec.get(e, 0) - c * a
                        if v:
                            vec[e] = v
                        else:
                            vec.pop(e, None)
                    for e, a in rc.items():
                        v = combo.get(e, 0) - c * a
                        if v:
                            combo[e] = v
                        else:
                            combo.pop(e, None)
                    changed = True
        if not vec:
            terms = {}
            for deg, c in combo.items():
                e = [0] * len(I.vars)
                e[i] = deg
                terms[tuple(e)] = c
            return Poly(I.vars, terms).monic()
        pivot = max(vec, key=I.order.key)
        c = vec[pivot]
        rows.append(({e: a / c for e, a in vec.items()}, {e: a / c for e, a in combo.items()}))
        pivots[pivot] = len(rows) - 1
        power = power * x
    raise AssertionError("minimal polynomial degree exceeds colength")


def zero_dim_radical(I: Ideal) -> Ideal:
    """Radical of a zero-dimensional ideal by adjoining squarefree minimal polynomials."""
    extra = []
    for v in I.vars:
        g = _minimal_polynomial(I, v)
        dg = differentiate(g, v)
        extra.append(divide_exact(g, gcd_multivariate(g, dg)))
    return Ideal(I.vars, list(I.gens) + extra, I.order)


def point_count(I: Ideal) -> int:
    """Number of distinct geometric points of a zero-dimensional affine ideal."""
    return affine_colength(zero_dim_radical(I))


def _chart(I: Ideal, groups: Sequence[Sequence[str]], rng: random.Random) -> Ideal:
    flat = [v for grp in groups for v in grp]
    extra = []
    for grp in groups:
        while True:
            coeffs = [rng.randint(-COEFF_RANGE, COEFF_RANGE) for _ in grp]
            if any(coeffs):
                break
        form = Poly.const(flat, -1)
        for c, v in zip(coeffs, grp):
            form = form + c * Poly.var(flat, v)
        extra.append(form)
    return Ideal(flat, [g.to_vars(flat) for g in I.gens] + extra, GREVLEX)


def _check_groups(I: Ideal, groups: Sequence[Sequence[str]]) -> List[List[str]]:
    groups = [list(g) for g in groups]
    flat = [v for g in groups for v in g]
    if len(set(flat)) != len(flat):
        raise PolyError("variable groups must be disjoint")
    for v in flat:
        if v not in I.vars:
            raise PolyError(f"unknown projective variable {v!r}")
    for g in I.gens:
        for v in g.used_vars():
            if v not in flat:
                raise PolyError(f"generator {g} involves non-projective variable {v!r}; evaluate it first")
        for grp in groups:
            if not g.is_homogeneous(grp):
                raise PolyError(f"generator {g} is not homogeneous in {grp}")
    return groups


def projective_degree(
    I: Ideal,
    proj_vars: Sequence,
    seed: int = 0,
    retries: int = DEGREE_RETRIES,
    count_points: bool = False,
) -> int:
    """Length of the zero-dimensional (multi)projective scheme cut out by ``I``.

    ``proj_vars`` is either a list of variable names (one projective space) or
    a list of groups.  The length is the affine colength in a random chart
    (each group's random linear form set to 1), accepted once two independent
    charts agree.  With ``count_points`` the number of distinct points is
    returned instead.
    """
    if proj_vars and all(isinstance(v, str) for v in proj_vars):
        groups = [list(proj_vars)]
    else:
        groups = [list(g) for g in proj_vars]
    groups = _check_groups(I, groups)
    rng = random.Random(seed)
    measure = point_count if count_points else affine_colength
    values = []
    for _ in range(2 + retries):
        values.append(measure(_chart(I, groups, rng)))
        if len(values) >= 2 and values[-1] == values[-2]:
            return values[-1]
    raise DegreeDisagreement(f"random charts disagree after {retries} retries: {values}")


# ---------------------------------------------------------------------------
# squarefree monomial ideals


def monomial_minimal_primes(I: Ideal) -> List[Ideal]:
    """Minimal primes of a squarefree monomial ideal, each generated by variables."""
    supports = []
    for g in I.gens:
        if len(g.terms) != 1:
            raise NotSquarefreeMonomial(f"generator {g} is not a monomial")
        (e,) = g.terms
        if any(x > 1 for x in e):
            raise NotSquarefreeMonomial(f"generator {g} is not squarefree")
        s = frozenset(i for i, x in enumerate(e) if x)
        if not s:
            return []  # unit ideal
        supports.append(s)
    covers = set()

    def split(chosen: frozenset) -> None:
        for s in supports:
            if not (s & chosen):
                for i in sorted(s):
                    split(chosen | {i})
                return
        covers.add(chosen)

    split(frozenset())
    minimal = [c for c in covers if not any(o < c for o in covers)]
    minimal.sort(key=lambda c: (len(c), sorted(c)))
    return [Ideal(I.vars, [Poly.var(I.vars, I.vars[i]) for i in sorted(c)], I.order) for c in minimal]


# ---------------------------------------------------------------------------
# certificates


def spolys_reduce_to_zero(basis: Sequence[Poly], order: MonomialOrder) -> bool:
    """Check Buchberger's criterion over all pairs of ``basis``."""
    elems = [_Elem(b.terms, order) for b in basis if b]
    for a, b in itertools.combinations(elems, 2):
        s = _spoly(a, b)
        if s and _reduce(s, elems, order):
            return False
    return True


def is_reduced_basis(basis: Sequence[Poly], order: MonomialOrder) -> bool:
    elems = [_Elem(b.terms, order) for b in basis]
    for b, e in zip(basis, elems):
        if b.lead(order)[1] != 1:
            return False
        for o in elems:
            if o is e:
                continue
            if any(_divides(o.lm, m) for m in b.terms):
                return False
    return True
