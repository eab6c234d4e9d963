"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` lives over an ordered tuple of variable names and stores a
map from exponent tuples to :class:`fractions.Fraction` coefficients.  Values
are immutable: every operation returns a new polynomial.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as _igcd, isqrt, lcm
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

Mono = Tuple[int, ...]
Coeff = Union[int, Fraction]

_NAME_RE = re.compile(r"^[a-zA-Z_][a-zA-Z0-9_]*$")


class PolyError(ValueError):
    """Base class for polynomial-layer errors."""


class VarSetMismatch(PolyError):
    pass


class UnknownVariable(PolyError):
    def __init__(self, name: str):
        super().__init__(f"unknown variable {name!r}")
        self.name = name


def varset(names: Iterable[str]) -> Tuple[str, ...]:
    """Validate and freeze an ordered variable list."""
    names = tuple(names)
    for name in names:
        if not isinstance(name, str) or not _NAME_RE.match(name):
            raise PolyError(f"invalid variable name {name!r}")
    if len(set(names)) != len(names):
        raise PolyError(f"duplicate variable names in {names}")
    return names


# ---------------------------------------------------------------------------
# monomial orders


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order; ``key(e)`` is larger for larger monomials.

    ``kind`` is one of ``"lex"``, ``"grevlex"`` or ``"elim"``; the
    elimination-block order compares the first ``k`` variables by grevlex and
    breaks ties by grevlex on the remaining ones.
    """

    kind: str = "grevlex"
    k: int = 0

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex", "elim"):
            raise PolyError(f"unknown monomial order {self.kind!r}")

    def key(self, e: Mono) -> Tuple[int, ...]:
        """Flat integer tuple; tuple comparison realizes the order."""
        if self.kind == "grevlex":
            return _grevlex_key(e)
        if self.kind == "lex":
            return tuple(e)
        k = self.k
        return _grevlex_key(e[:k]) + _grevlex_key(e[k:])

    def __str__(self):
        return f"elim({self.k})" if self.kind == "elim" else self.kind


def _grevlex_key(e: Mono) -> Tuple[int, ...]:
    return (sum(e),) + tuple(-x for x in reversed(e))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def elimination_order(k: int) -> MonomialOrder:
    return MonomialOrder("elim", k)


def order_from_name(name: str) -> MonomialOrder:
    if name in ("lex", "grevlex"):
        return MonomialOrder(name)
    m = re.fullmatch(r"elim\((\d+)\)", name)
    if m:
        return elimination_order(int(m.group(1)))
    raise PolyError(f"unknown monomial order {name!r}")


# ---------------------------------------------------------------------------
# polynomials


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"coefficient must be int or Fraction, got {type(c).__name__}")


class Poly:
    """Polynomial over the variables ``vars`` with rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence[str], terms: Optional[Mapping[Mono, Coeff]] = None):
        self.vars = tuple(vars)
        n = len(self.vars)
        clean: Dict[Mono, Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n:
                    raise PolyError(f"exponent {e} does not match {n} variables")
                c = _frac(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, vars: Tuple[str, ...], terms: Dict[Mono, Fraction]) -> "Poly":
        # terms must already be clean (no zero coefficients)
        p = object.__new__(cls)
        p.vars = vars
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls._raw(tuple(vars), {})

    @classmethod
    def const(cls, vars: Sequence[str], c: Coeff) -> "Poly":
        vars = tuple(vars)
        c = _frac(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "Poly":
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        e = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {e: Fraction(1)})

    @classmethod
    def monomial(cls, vars: Sequence[str], e: Mono, c: Coeff = 1) -> "Poly":
        return cls(vars, {tuple(e): c})

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolyError("polynomial is not constant")
        return self.terms.get((0,) * len(self.vars), Fraction(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        i = self._index(name)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def is_homogeneous(self, names: Optional[Iterable[str]] = None) -> bool:
        idx = range(len(self.vars)) if names is None else [self._index(v) for v in names]
        degrees = {sum(e[i] for i in idx) for e in self.terms}
        return len(degrees) <= 1

    def used_vars(self) -> Tuple[str, ...]:
        used = [False] * len(self.vars)
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return tuple(v for v, u in zip(self.vars, used) if u)

    def lead(self, order: MonomialOrder = GREVLEX) -> Tuple[Mono, Fraction]:
        if not self.terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> Fraction:
        return self.lead(order)[1]

    def sorted_terms(self, order: MonomialOrder = GREVLEX):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariable(name) from None

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise VarSetMismatch(f"variable sets differ: {self.vars} vs {other.vars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for e, c in other.terms.items():
            v = terms.get(e, 0) + c
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Poly._raw(self.vars, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            if not c:
                return Poly.zero(self.vars)
            return Poly._raw(self.vars, {e: a * c for e, a in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Mono, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = terms.get(e, 0) + c1 * c2
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return Poly._raw(self.vars, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a nonnegative integer")
        result = Poly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / _frac(other))
        return NotImplemented

    def mul_term(self, e: Mono, c: Fraction) -> "Poly":
        return Poly._raw(
            self.vars, {tuple(a + b for a, b in zip(m, e)): c * a0 for m, a0 in self.terms.items()}
        )

    def monic(self, order: MonomialOrder = GREVLEX) -> "Poly":
        if not self.terms:
            return self
        return self * (1 / self.leading_coefficient(order))

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self.constant_value() == other
        if not isinstance(other, Poly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self.terms.items())))
        return self._hash

    # -- ring changes -----------------------------------------------------

    def to_vars(self, new_vars: Sequence[str]) -> "Poly":
        """Re-express over ``new_vars``; every used variable must be present."""
        new_vars = tuple(new_vars)
        if new_vars == self.vars:
            return self
        pos = {v: i for i, v in enumerate(new_vars)}
        used = self.used_vars()
        for v in used:
            if v not in pos:
                raise UnknownVariable(v)
        moves = [(i, pos[v]) for i, v in enumerate(self.vars) if v in pos]
        n = len(new_vars)
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * n
            for i, j in moves:
                ne[j] = e[i]
            terms[tuple(ne)] = c
        return Poly._raw(new_vars, terms)

    def substitute(self, mapping: Mapping[str, "Poly"]) -> "Poly":
        """Replace variables by polynomials over a common target variable set."""
        if not mapping:
            return self
        targets = {p.vars for p in mapping.values()}
        if len(targets) != 1:
            raise VarSetMismatch("substituted polynomials must share one variable set")
        (target,) = targets
        for name in mapping:
            self._index(name)
        images = [mapping.get(v) for v in self.vars]
        for v, img in zip(self.vars, images):
            if img is None and v not in target:
                raise UnknownVariable(v)
        gens = [img if img is not None else Poly.var(target, v) for v, img in zip(self.vars, images)]
        powers: Dict[Tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            if (i, k) not in powers:
                powers[(i, k)] = gens[i] ** k
            return powers[(i, k)]

        result = Poly.zero(target)
        for e, c in self.terms.items():
            term = Poly.const(target, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    # -- printing ---------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r}, vars={self.vars})"


def format_poly(p: Poly, order: MonomialOrder = GREVLEX) -> str:
    """Canonical text: terms in descending order (grevlex unless given), exact coefficients."""
    if not p.terms:
        return "0"
    out = []
    for e, c in p.sorted_terms(order):
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k
        )
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def format_rational(c: Fraction) -> str:
    return str(Fraction(c))


# ---------------------------------------------------------------------------
# calculus and evaluation


def poly_arith(a: Poly, b, op: str) -> Poly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    raise PolyError(f"unknown operation {op!r}")


def differentiate(p: Poly, name: str) -> Poly:
    i = p._index(name)
    terms = {}
    for e, c in p.terms.items():
        k = e[i]
        if k:
            ne = e[:i] + (k - 1,) + e[i + 1 :]
            terms[ne] = c * k
    return Poly._raw(p.vars, terms)


def evaluate(p: Poly, bindings: Mapping[str, Coeff]) -> Poly:
    """Substitute rational values; the result lives over the unbound variables."""
    idx = {}
    for name, value in bindings.items():
        idx[p._index(name)] = _frac(value)
    keep = [i for i in range(len(p.vars)) if i not in idx]
    new_vars = tuple(p.vars[i] for i in keep)
    terms: Dict[Mono, Fraction] = {}
    for e, c in p.terms.items():
        for i, val in idx.items():
            if e[i]:
                c = c * val ** e[i]
        if not c:
            continue
        ne = tuple(e[i] for i in keep)
        v = terms.get(ne, 0) + c
        if v:
            terms[ne] = v
        else:
            terms.pop(ne, None)
    return Poly._raw(new_vars, terms)


# ---------------------------------------------------------------------------
# division


def poly_divmod(a: Poly, b: Poly, order: MonomialOrder = LEX) -> Tuple[Poly, Poly]:
    """Multivariate division of ``a`` by the single divisor ``b``."""
    if a.vars != b.vars:
        raise VarSetMismatch(f"variable sets differ: {a.vars} vs {b.vars}")
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    lb, cb = b.lead(order)
    rest_b = [(e, c) for e, c in b.terms.items() if e != lb]
    f = dict(a.terms)
    q: Dict[Mono, Fraction] = {}
    r: Dict[Mono, Fraction] = {}
    key = order.key
    while f:
        m = max(f, key=key)
        c = f.pop(m)
        if all(x >= y for x, y in zip(m, lb)):
            s = tuple(x - y for x, y in zip(m, lb))
            t = c / cb
            q[s] = q.get(s, 0) + t
            for e, cc in rest_b:
                ne = tuple(x + y for x, y in zip(e, s))
                v = f.get(ne, 0) - t * cc
                if v:
                    f[ne] = v
                else:
                    f.pop(ne, None)
        else:
            r[m] = c
    return Poly(a.vars, q), Poly._raw(a.vars, r)


def divide_exact(a: Poly, b: Poly) -> Poly:
    q, r = poly_divmod(a, b, LEX)
    if r:
        raise PolyError(f"{b} does not divide {a}")
    return q


def divides(b: Poly, a: Poly) -> bool:
    if not b:
        return not a
    return not poly_divmod(a, b, LEX)[1]


# ---------------------------------------------------------------------------
# gcd via recursive content / primitive part and subresultant PRS


def _coefficients_in(p: Poly, i: int) -> Dict[int, Poly]:
    """Coefficients of ``p`` as a polynomial in variable ``i``."""
    parts: Dict[int, Dict[Mono, Fraction]] = {}
    for e, c in p.terms.items():
        k = e[i]
        ne = e[:i] + (0,) + e[i + 1 :]
        parts.setdefault(k, {})[ne] = c
    return {k: Poly._raw(p.vars, t) for k, t in parts.items()}


def _deg(p: Poly, i: int) -> int:
    return max((e[i] for e in p.terms), default=-1)


def _lc_in(p: Poly, i: int) -> Poly:
    d = _deg(p, i)
    return Poly._raw(p.vars, {e[:i] + (0,) + e[i + 1 :]: c for e, c in p.terms.items() if e[i] == d})


def _content(p: Poly, i: int) -> Poly:
    g = Poly.zero(p.vars)
    # small coefficients first keeps the running gcd cheap
    for c in sorted(_coefficients_in(p, i).values(), key=lambda q: (len(q.terms), q.total_degree())):
        g = _gcd(g, c)
        if g.is_constant() and g:
            return Poly.const(p.vars, 1)
    return g


def _prem(a: Poly, b: Poly, i: int) -> Poly:
    """Pseudo-remainder of ``a`` by ``b`` in variable ``i``."""
    db = _deg(b, i)
    lcb = _lc_in(b, i)
    xi = tuple(1 if j == i else 0 for j in range(len(a.vars)))
    r = a
    delta = _deg(a, i) - db + 1
    while r and _deg(r, i) >= db:
        dr = _deg(r, i)
        s = tuple(x * (dr - db) for x in xi)
        r = r * lcb - b.mul_term(s, Fraction(1)) * _lc_in(r, i)
        delta -= 1
    if delta > 0:
        r = r * lcb ** delta
    return r


def _int_terms(p: Poly) -> Dict[Mono, int]:
    den = lcm(*(c.denominator for c in map(Fraction, p.terms.values())))
    return {e: int(c * den) for e, c in p.terms.items()}


def _divides_terms(b: Dict[Mono, int], a: Dict[Mono, int], k: int) -> bool:
    vars = tuple(f"v{j}" for j in range(k))
    a_, b_ = ({e: Fraction(v) for e, v in t.items()} for t in (a, b))
    return not poly_divmod(Poly._raw(vars, a_), Poly._raw(vars, b_), LEX)[1]


def _heu_gcd(f: Dict[Mono, int], g: Dict[Mono, int], k: int) -> Optional[Dict[Mono, int]]:
    """Heuristic gcd of nonzero integer polynomials in ``k`` variables, or None.

    The last variable is evaluated at a large integer xi, the gcd of the
    images is lifted back by symmetric xi-adic expansion and accepted only
    if it divides both inputs; xi above twice the smaller max-norm makes an
    accepted candidate the true gcd.
    """
    cf, cg = _igcd(*f.values()), _igcd(*g.values())
    c = _igcd(cf, cg)
    if k == 0:
        return {(): c}
    f = {e: v // cf for e, v in f.items()}
    g = {e: v // cg for e, v in g.items()}
    xi = 2 * min(max(map(abs, f.values())), max(map(abs, g.values()))) + 29
    for _ in range(6):
        ff: Dict[Mono, int] = {}
        gg: Dict[Mono, int] = {}
        for src, dst in ((f, ff), (g, gg)):
            for e, v in src.items():
                dst[e[:-1]] = dst.get(e[:-1], 0) + v * xi ** e[-1]
            for e in [e for e, v in dst.items() if not v]:
                del dst[e]
        h = _heu_gcd(ff, gg, k - 1) if ff and gg else None
        if h is not None:
            H: Dict[Mono, int] = {}
            half = xi // 2
            for e, v in h.items():
                j = 0
                while v:
                    r = v % xi
                    if r > half:
                        r -= xi
                    if r:
                        H[e + (j,)] = r
                    v = (v - r) // xi
                    j += 1
            ch = _igcd(*H.values())
            H = {e: v // ch for e, v in H.items()}
            if _divides_terms(H, f, k) and _divides_terms(H, g, k):
                return {e: c * v for e, v in H.items()}
        xi = xi * 73794 * isqrt(isqrt(xi)) // 27011
    return None


def _gcd(a: Poly, b: Poly) -> Poly:
    """Unnormalized gcd of two polynomials (up to a rational unit)."""
    if not a:
        return b
    if not b:
        return a
    if a.is_constant() or b.is_constant():
        return Poly.const(a.vars, 1)
    h = _heu_gcd(_int_terms(a), _int_terms(b), len(a.vars))
    if h is not None:
        return Poly(a.vars, h)
    return _gcd_prs(a, b)


def _gcd_prs(a: Poly, b: Poly) -> Poly:
    if not a:
        return b
    if not b:
        return a
    if a.is_constant() or b.is_constant():
        return Poly.const(a.vars, 1)
    used = [j for j in range(len(a.vars)) if _deg(a, j) > 0 or _deg(b, j) > 0]
    # eliminate along the variable of least degree: shorter remainder sequences
    i = min(used, key=lambda j: (max(_deg(a, j), _deg(b, j)), -j))
    if _deg(a, i) <= 0:
        # a is free of the main variable: gcd divides every coefficient of b
        return _gcd(a, _content(b, i))
    if _deg(b, i) <= 0:
        return _gcd(b, _content(a, i))
    ca, cb = _content(a, i), _content(b, i)
    pa, pb = divide_exact(a, ca), divide_exact(b, cb)
    c = _gcd(ca, cb)
    g = _subresultant_prs(pa, pb, i)
    if _deg(g, i) <= 0:
        return c
    g = divide_exact(g, _content(g, i))
    return c * g


def _subresultant_prs(a: Poly, b: Poly, i: int) -> Poly:
    if _deg(a, i) < _deg(b, i):
        a, b = b, a
    one = Poly.const(a.vars, 1)
    g = h = one
    while True:
        delta = _deg(a, i) - _deg(b, i)
        r = _prem(a, b, i)
        if not r:
            return b
        if _deg(r, i) == 0:
            return one
        a, b = b, divide_exact(r, g * h ** delta)
        g = _lc_in(a, i)
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = divide_exact(g ** delta, h ** (delta - 1))


def gcd_multivariate(a: Poly, b: Poly) -> Poly:
    """Greatest common divisor, normalized to grevlex-leading coefficient 1."""
    if a.vars != b.vars:
        raise VarSetMismatch(f"variable sets differ: {a.vars} vs {b.vars}")
    return _gcd(a, b).monic(GREVLEX)


def gcd_list(polys: Sequence[Poly]) -> Poly:
    polys = list(polys)
    if not polys:
        raise PolyError("gcd of an empty list")
    g = Poly.zero(polys[0].vars)
    for p in polys:
        g = gcd_multivariate(g, p)
    return g


# ---------------------------------------------------------------------------
# square roots


def _rational_sqrt(c: Fraction) -> Optional[Fraction]:
    if c < 0:
        return None
    n, d = c.numerator, c.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def poly_square_root(p: Poly) -> Optional[Poly]:
    """Exact square root with positive grevlex-leading coefficient, or ``None``.

    Terms of the root are solved one at a time in descending grevlex order;
    the first inconsistency means ``p`` is not a square.
    """
    if not p:
        return p
    lm, lc = p.lead(GREVLEX)
    if any(x % 2 for x in lm):
        return None
    root_c = _rational_sqrt(lc)
    if root_c is None:
        return None
    s_lead = tuple(x // 2 for x in lm)
    s = Poly._raw(p.vars, {s_lead: root_c})
    two_lead = 2 * root_c
    rem = p - s * s
    while rem:
        m, c = rem.lead(GREVLEX)
        if not all(x >= y for x, y in zip(m, s_lead)):
            return None
        t_e = tuple(x - y for x, y in zip(m, s_lead))
        if GREVLEX.key(t_e) >= GREVLEX.key(s_lead):
            return None
        t = Poly._raw(p.vars, {t_e: c / two_lead})
        rem = rem - (2 * s + t) * t
        s = s + t
    return s


# ---------------------------------------------------------------------------
# determinants and characteristic polynomials


def determinant(matrix: Sequence[Sequence[Poly]]) -> Poly:
    """Exact determinant by Laplace expansion memoized over column subsets."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise PolyError("determinant of a non-square matrix")
    if n == 0:
        raise PolyError("determinant of an empty matrix")
    vars = matrix[0][0].vars
    memo: Dict[int, Poly] = {0: Poly.const(vars, 1)}

    def minor(row: int, cols: int) -> Poly:
        # determinant of rows row..n-1 restricted to the column bitmask cols
        if cols in memo:
            return memo[cols]
        total = Poly.zero(vars)
        sign = 1
        for j in range(n):
            if cols >> j & 1:
                entry = matrix[row][j]
                if entry:
                    sub = minor(row + 1, cols & ~(1 << j))
                    if sub:
                        total = total + entry * sub if sign > 0 else total - entry * sub
                sign = -sign
        memo[cols] = total
        return total

    return minor(0, (1 << n) - 1)


def char_poly(matrix: Sequence[Sequence[Poly]], var: str) -> Poly:
    """det(var*I - M), over the matrix variables with ``var`` appended."""
    n = len(matrix)
    if n == 0 or any(len(row) != n for row in matrix):
        raise PolyError("characteristic polynomial of a non-square matrix")
    vars = matrix[0][0].vars
    if var in vars:
        raise PolyError(f"variable {var!r} collides with the matrix variables")
    new_vars = varset(vars + (var,))
    t = Poly.var(new_vars, var)
    shifted = [
        [(t if i == j else 0) - matrix[i][j].to_vars(new_vars) for j in range(n)]
        for i in range(n)
    ]
    return determinant(shifted)


def coefficients_in(p: Poly, name: str) -> Dict[int, Poly]:
    """Coefficients of ``p`` viewed as a polynomial in ``name`` (other vars kept)."""
    return _coefficients_in(p, p._index(name))
