"""Predicted ideals attached to a Jordan specification.

Blocks are laid out consecutively: block v contributes m_v Jordan blocks of
size i_v, each upper triangular with ones above the diagonal, and the fiber
coordinates z1..zr follow that layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Set, Tuple

from .grasseq import z_names
from .grobner import Ideal
from .higgsfield import HiggsField, validate_higgs
from .matrices import block_diagonal, jordan_block
from .polyring import GREVLEX, Poly, PolyError, varset


class SpecError(PolyError):
    pass


@dataclass(frozen=True)
class JordanSpec:
    base_vars: Tuple[str, ...]
    blocks: Tuple[Tuple[Poly, int, int], ...]  # (eigenvalue, size, multiplicity)

    def __post_init__(self):
        varset(self.base_vars)
        if not self.blocks:
            raise SpecError("a Jordan specification needs at least one block")
        seen = set()
        for lam, i, m in self.blocks:
            if lam.vars != tuple(self.base_vars):
                raise SpecError(f"eigenvalue {lam} is not over {self.base_vars}")
            if i < 1 or m < 1:
                raise SpecError("block sizes and multiplicities must be positive")
            if (lam, i) in seen:
                raise SpecError(f"repeated block ({lam}, {i}); merge it into one multiplicity")
            seen.add((lam, i))

    @property
    def r(self) -> int:
        return sum(i * m for _, i, m in self.blocks)

    @property
    def sizes(self) -> List[int]:
        return [i for _, i, _ in self.blocks]

    def eigenvalues(self) -> List[Poly]:
        out: List[Poly] = []
        for lam, _, _ in self.blocks:
            if lam not in out:
                out.append(lam)
        return out

    def canonical(self) -> "JordanSpec":
        """Blocks grouped by eigenvalue (first appearance), sizes descending in each group."""
        order = self.eigenvalues()
        blocks = sorted(self.blocks, key=lambda b: (order.index(b[0]), -b[1]))
        return JordanSpec(self.base_vars, tuple(blocks))


def make_spec(base_vars: Sequence[str], blocks: Sequence[Tuple]) -> JordanSpec:
    """Build a spec from (eigenvalue, size, mult) with eigenvalues as Poly, int or Fraction."""
    base_vars = tuple(base_vars)
    out = []
    for lam, i, m in blocks:
        if not isinstance(lam, Poly):
            lam = Poly.const(base_vars, lam)
        out.append((lam, int(i), int(m)))
    return JordanSpec(base_vars, tuple(out))


# ---------------------------------------------------------------------------
# index families


@dataclass(frozen=True)
class IndexFamily:
    A: Tuple[Tuple[int, ...], ...]
    B: Tuple[int, ...]
    C: Tuple[int, ...]
    L: Tuple[int, ...]  # indices covered by no member of A


def family(A: Sequence[Sequence[int]], r: int) -> IndexFamily:
    A = tuple(tuple(sorted(a)) for a in A)
    used: Set[int] = set()
    for a in A:
        if not a:
            raise SpecError("empty member in index family")
        if used & set(a):
            raise SpecError(f"overlapping members in index family {A}")
        if min(a) < 1 or max(a) > r:
            raise SpecError(f"index out of range 1..{r} in {a}")
        used |= set(a)
    B = tuple(sorted(b for a in A for b in a[1:]))
    C = tuple(sorted(a[-1] for a in A))
    L = tuple(k for k in range(1, r + 1) if k not in used)
    return IndexFamily(A, B, C, L)


def _require_sorted(spec: JordanSpec) -> None:
    sizes = spec.sizes
    if any(a <= b for a, b in zip(sizes, sizes[1:])):
        raise SpecError(f"block sizes {sizes} are not strictly decreasing")


def jordan_spec_sets(spec: JordanSpec) -> Tuple[IndexFamily, List[IndexFamily]]:
    """The global family and the per-level families (level v = 1..s)."""
    spec = spec.canonical()
    _require_sorted(spec)
    r = spec.r
    A = []
    offset = 0
    for _, i, m in spec.blocks:
        for k in range(m):
            A.append(tuple(range(offset + k * i + 1, offset + (k + 1) * i + 1)))
        offset += i * m
    levels = []
    for v, (_, iv, _) in enumerate(spec.blocks):
        Av = []
        offset = 0
        for alpha, (_, ia, ma) in enumerate(spec.blocks):
            if alpha > v:
                break
            for k in range(ma):
                Av.append(tuple(offset + k * ia + j for j in range(1, iv + 1)))
            offset += ia * ma
        levels.append(family(Av, r))
    return family(A, r), levels


# ---------------------------------------------------------------------------
# Segre-Veronese ideals


def _minor_matrix(A: Sequence[Sequence[int]], z: Dict[int, Poly]) -> List[Tuple[Poly, Poly]]:
    cols = []
    for a in A:
        a = sorted(a)
        for k in range(len(a) - 1):
            cols.append((z[a[k]], z[a[k + 1]]))
    return cols


def sv_generators(A: Sequence[Sequence[int]], z: Dict[int, Poly]) -> List[Poly]:
    cols = _minor_matrix(A, z)
    out = []
    for (t1, b1), (t2, b2) in combinations(cols, 2):
        g = t1 * b2 - t2 * b1
        if g:
            out.append(g)
    return out


def sv_ideal(A: Sequence[Sequence[int]], r: int, vars: Sequence[str] = ()) -> Ideal:
    """2x2 minors of the concatenated matrices [[z_a1..z_a(d-1)], [z_a2..z_ad]]."""
    family(A, r)
    vars = tuple(vars) or z_names(r)
    z = {k: Poly.var(vars, f"z{k}") for k in range(1, r + 1)}
    return Ideal(vars, sv_generators(A, z), GREVLEX)


def sv_parametrization_check(A: Sequence[Sequence[int]], r: int, s: int) -> bool:
    """Substitute z_{a_(k+1)} = v_j u0^(d-1-k) u1^k (block j) and check every minor vanishes."""
    sizes = {len(a) for a in A}
    if len(sizes) > 1:
        raise SpecError("sv_parametrization_check needs equal block sizes")
    if len(A) != s:
        raise SpecError(f"family has {len(A)} members, expected {s}")
    I = sv_ideal(A, r)
    target = ("u0", "u1") + tuple(f"v{j}" for j in range(1, s + 1))
    u0, u1 = Poly.var(target, "u0"), Poly.var(target, "u1")
    image = {name: Poly.zero(target) for name in I.vars}
    for j, a in enumerate(A, start=1):
        d = len(a)
        vj = Poly.var(target, f"v{j}")
        for k, idx in enumerate(sorted(a)):
            image[f"z{idx}"] = vj * u0 ** (d - 1 - k) * u1 ** k
    return all(not g.substitute(image) for g in I.gens)


# ---------------------------------------------------------------------------
# predicted ideals


@dataclass(frozen=True)
class ComponentIdeal:
    v: int
    ideal: Ideal
    dimension: int
    fiber_degree: int


def _vars(spec: JordanSpec) -> Tuple[str, ...]:
    fiber = z_names(spec.r)
    if set(fiber) & set(spec.base_vars):
        raise SpecError("fiber variable names collide with base variables")
    return spec.base_vars + fiber


def _family_ideal(F: IndexFamily, vars, r: int, linear: Sequence[int] = ()) -> Ideal:
    z = {k: Poly.var(vars, f"z{k}") for k in range(1, r + 1)}
    gens = [z[l] for l in linear]
    seen = set()
    for b in F.B:
        for c in F.C:
            key = (min(b, c), max(b, c))
            if key not in seen:
                seen.add(key)
                gens.append(z[key[0]] * z[key[1]])
    gens.extend(sv_generators(F.A, z))
    return Ideal(vars, gens, GREVLEX)


def _one_eigenvalue(spec: JordanSpec) -> None:
    if len(spec.eigenvalues()) != 1:
        raise SpecError("this mode needs a single eigenvalue shared by all blocks")


def predicted_ideal(spec: JordanSpec, mode: str = "full", v: int = 0):
    """The predicted ideal in mode ``full``, ``component`` (level v, 1-based) or ``single``."""
    vars = _vars(spec)
    if mode == "single":
        if len(spec.blocks) != 1 or spec.blocks[0][2] != 1:
            raise SpecError("single-block mode needs exactly one block of multiplicity 1")
        return single_block_ideal(spec.r, vars)
    _one_eigenvalue(spec)
    spec = spec.canonical()
    full, levels = jordan_spec_sets(spec)
    if mode == "full":
        return _family_ideal(full, vars, spec.r)
    if mode == "component":
        if not 1 <= v <= len(levels):
            raise SpecError(f"component index must lie in 1..{len(levels)}")
        F = levels[v - 1]
        ideal = _family_ideal(F, vars, spec.r, linear=F.L)
        dim = -1 + sum(m for _, _, m in spec.blocks[:v])
        return ComponentIdeal(v, ideal, dim, spec.blocks[v - 1][1])
    raise SpecError(f"unknown mode {mode!r}")


def single_block_ideal(r: int, vars: Sequence[str] = ()) -> Ideal:
    """Minors of [[z1..z(r-1)], [z2..zr]] plus z_i z_r for i = 2..r."""
    vars = tuple(vars) or z_names(r)
    z = {k: Poly.var(vars, f"z{k}") for k in range(1, r + 1)}
    gens = sv_generators([tuple(range(1, r + 1))], z)
    gens += [z[i] * z[r] for i in range(2, r + 1)]
    return Ideal(vars, gens, GREVLEX)


def component_ideals(spec: JordanSpec) -> List[ComponentIdeal]:
    _one_eigenvalue(spec)
    return [predicted_ideal(spec, "component", v) for v in range(1, len(spec.blocks) + 1)]


def spec_matrix(spec: JordanSpec) -> List[List[Poly]]:
    """Block-diagonal matrix over the base ring realizing the (canonical) spec."""
    spec = spec.canonical()
    blocks = []
    for lam, i, m in spec.blocks:
        blocks.extend(jordan_block(spec.base_vars, lam, i) for _ in range(m))
    return block_diagonal(spec.base_vars, blocks)


def spec_field(spec: JordanSpec) -> HiggsField:
    return validate_higgs([spec_matrix(spec)], spec.base_vars)


def decompose_by_eigenvalue(spec: JordanSpec) -> List[Tuple[Poly, Ideal]]:
    """One ideal per eigenvalue: its block group's predicted ideal plus the other z's."""
    spec = spec.canonical()
    vars = _vars(spec)
    out = []
    offset = 0
    for lam in spec.eigenvalues():
        group = [b for b in spec.blocks if b[0] == lam]
        size = sum(i * m for _, i, m in group)
        sub = JordanSpec(spec.base_vars, tuple(group))
        local_full, _ = jordan_spec_sets(sub)
        shifted = IndexFamily(
            tuple(tuple(a + offset for a in A) for A in local_full.A),
            tuple(b + offset for b in local_full.B),
            tuple(c + offset for c in local_full.C),
            (),
        )
        outside = [k for k in range(1, spec.r + 1) if not offset < k <= offset + size]
        out.append((lam, _family_ideal(shifted, vars, spec.r, linear=outside)))
        offset += size
    return out


def classify_morphism(spec: JordanSpec) -> Dict[str, bool]:
    """Finite iff every eigenvalue occupies a single block; reduced iff all blocks have size 1."""
    lams = [lam for lam, _, _ in spec.blocks]
    finite = all(m == 1 for _, _, m in spec.blocks) and len(set(lams)) == len(lams)
    reduced = all(i == 1 for _, i, _ in spec.blocks)
    return {"finite": finite, "reduced": reduced}
