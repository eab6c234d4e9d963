from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import to_sympy
from higgsgrass import Poly, format_poly, parse_poly
from higgsgrass.grasseq import (
    FiberFirstOrder,
    grass_ideal,
    pluecker_relations,
    pluecker_sign,
    pluecker_subsets,
    rank1_ideal,
    restrict_fiber,
)
from higgsgrass.grobner import Ideal, ideal_equal, ideal_member, projective_degree
from higgsgrass.higgsfield import normalize_trace, validate_higgs
from higgsgrass.matrices import jordan_block
from higgsgrass.parsing import parse_many
from higgsgrass.polyring import PolyError, evaluate

X = ("x",)


def field(rows, base=X):
    return validate_higgs([[parse_many([str(a) for a in row], base) for row in rows]], base)


def const_field(M):
    return validate_higgs([[[Poly.const(X, a) for a in row] for row in M]], X)


def test_rank1_generator_example():
    G = rank1_ideal(field([["0", "x"], ["1", "0"]]))
    assert [format_poly(g, FiberFirstOrder(1)) for g in G.ideal.gens] == ["z1^2 - x*z2^2"]
    assert G.ideal.vars == ("x", "z1", "z2") and G.kind == "vertical"


def test_pluecker_sign():
    assert pluecker_sign((1, 3), 2) == (-1, (1, 2, 3))
    assert pluecker_sign((2,), 1) == (1, (1, 2))
    assert pluecker_sign((1, 2), 2) == (0, None)


def test_pluecker_relations_r4():
    vars = tuple(f"p_{a}{b}" for a, b in combinations(range(1, 5), 2))
    rels = pluecker_relations(4, 2, vars)
    assert len(rels) == 1
    assert rels[0] == parse_poly("p_12*p_34 - p_13*p_24 + p_14*p_23", vars).monic()


@pytest.mark.parametrize("r,d", [(3, 1), (4, 1), (3, 2), (4, 2), (5, 2), (5, 3)])
def test_generator_counts(r, d):
    H = validate_higgs([jordan_block(X, parse_poly("x", X), r)], X)
    G = grass_ideal(H, d)
    expected = comb(r, 2) if d == 1 else comb(r, d + 1) * comb(r, d - 1)
    assert G.raw_count == expected


def test_d_out_of_range():
    H = const_field([[1, 0], [0, 2]])
    with pytest.raises(PolyError):
        grass_ideal(H, 2)
    with pytest.raises(PolyError):
        restrict_fiber(rank1_ideal(H), [1, 2])


def test_scalar_field_gives_whole_grassmannian():
    H = const_field([[5, 0, 0], [0, 5, 0], [0, 0, 5]])
    for d in (1, 2):
        assert grass_ideal(H, d).ideal.is_zero()


def test_distinct_eigenvalues_count_coordinate_subspaces():
    H = const_field([[1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0], [0, 0, 0, 4]])
    for d, expected in ((1, 4), (2, 6), (3, 4)):
        G = grass_ideal(H, d, include_pluecker_relations=True)
        fib = restrict_fiber(G, [0])
        assert projective_degree(fib, list(G.fiber_vars), seed=d) == expected


def test_shift_invariance():
    H = field([["x", "1", "0"], ["0", "x", "x"], ["0", "0", "-x"]])
    S = normalize_trace(H, [parse_poly("3*x - 1", X)])
    for d in (1, 2):
        assert ideal_equal(grass_ideal(H, d).ideal, grass_ideal(S, d).ideal)


def test_rank1_matches_minors():
    # vertical equations are the 2x2 minors of [z | phi z]
    H = field([["x", "1", "0"], ["0", "x", "1"], ["0", "0", "2"]])
    G = rank1_ideal(H)
    xs, z1, z2, z3 = sympy.symbols("x z1 z2 z3")
    phi = sympy.Matrix([[xs, 1, 0], [0, xs, 1], [0, 0, 2]])
    z = sympy.Matrix([z1, z2, z3])
    M = z.row_join(phi * z)
    minors = [sympy.expand(M[i, 0] * M[j, 1] - M[j, 0] * M[i, 1]) for i, j in combinations(range(3), 2)]
    ours = sympy.groebner([to_sympy(g).as_expr() for g in G.ideal.gens], xs, z1, z2, z3, order="grevlex")
    ref = sympy.groebner(minors, xs, z1, z2, z3, order="grevlex")
    assert ours == ref


def _pluecker_point(W, d):
    r = W.shape[0]
    return {f"p_{''.join(map(str, K))}": W.extract([k - 1 for k in K], list(range(d))).det()
            for K in pluecker_subsets(r, d)}


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.integers(-2, 2), min_size=16, max_size=16),
    st.lists(st.integers(-2, 2), min_size=4, max_size=4),
    st.lists(st.integers(-2, 2), min_size=8, max_size=8),
    st.sampled_from([(0, 1), (0, 2), (1, 3), (2, 3)]),
    st.booleans(),
)
def test_planes_vanish_iff_invariant(P, eig, W, pair, use_eigen):
    # phi = P diag(eig) P^-1; test either an eigen-plane or a random plane
    P = sympy.Matrix(4, 4, P)
    if P.det() == 0:
        P = sympy.eye(4)
    phi = P * sympy.diag(*eig) * P.inv()
    W = P.extract(list(range(4)), list(pair)) if use_eigen else sympy.Matrix(4, 2, W)
    if W.rank() < 2:
        return
    rows = [[Poly.const(X, Fraction(int(a.p), int(a.q))) for a in phi.row(i)] for i in range(4)]
    G = grass_ideal(validate_higgs([rows], X), 2)
    point = {v: Fraction(int(a.p), int(a.q)) for v, a in _pluecker_point(W, 2).items()}
    point["x"] = Fraction(0)
    vanish = all(evaluate(g, point) == 0 for g in G.ideal.gens)
    invariant = W.row_join(phi * W).rank() == 2
    assert vanish == invariant
