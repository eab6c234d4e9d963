from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from higgsgrass import Poly, char_poly
from higgsgrass.grobner import Ideal, ideal_equal, intersect_all
from higgsgrass.higgsfield import validate_higgs
from higgsgrass.parsing import parse_many
from higgsgrass.polyring import PolyError, evaluate
from higgsgrass.spectral import (
    CertificateError,
    certify_radical,
    certify_radical_intersection,
    spectral_fiber_degree,
    spectral_ideal,
)

X = ("x",)
XY = ("x", "y")


def field(*mats, base=X):
    return validate_higgs([[parse_many([str(a) for a in row], base) for row in m] for m in mats], base)


def test_curve_case_is_char_poly():
    M = [["x", "1", "0"], ["0", "x", "x^2"], ["0", "0", "1"]]
    H = field(M)
    S = spectral_ideal(H)
    (g,) = S.ideal.gens
    assert S.index == ((3,),)
    assert g == char_poly(H.matrix(0), "l1")


def test_names_and_errors():
    H = field([["x", "0"], ["0", "-x"]])
    assert spectral_ideal(H, ["t"]).ideal.vars == ("x", "t")
    with pytest.raises(PolyError):
        spectral_ideal(H, ["a", "b"])
    with pytest.raises(PolyError):
        spectral_fiber_degree(spectral_ideal(H), [1, 2])


def test_diagonal_surface_example():
    H = field([["x", "0"], ["0", "y"]], [["x", "0"], ["0", "y"]], base=XY)
    S = spectral_ideal(H, ("u", "v"))
    vars = S.ideal.vars
    g = lambda ts: Ideal(vars, parse_many(ts, vars))
    closed = g(["(u-x)*(u-y)", "(v-x)*(v-y)", "(u-v)^2"])
    assert ideal_equal(S.ideal, closed)
    # the embedded component over the diagonal x = y needs (x-v)(y-v) as well
    I3 = g(["(u-v)^2", "(x-v)^2", "(y-v)^2", "(u-v)*(x+y-2*v)", "(x-v)*(y-v)"])
    assert ideal_equal(intersect_all([g(["u-v", "y-v"]), g(["u-v", "x-v"]), I3]), S.ideal)
    assert certify_radical(I3, g(["x-y", "u-v", "y-v"]), 2)
    assert [spectral_fiber_degree(S, p) for p in ([1, 2], [0, 0], [Fraction(1, 3), Fraction(1, 3)])] == [2, 3, 3]


def test_certify_radical_examples():
    vars = XY
    I = Ideal(vars, parse_many(["x^2", "y^3"], vars))
    P = Ideal(vars, parse_many(["x", "y"], vars))
    assert certify_radical(I, P, 3)
    assert not certify_radical(I, P, 2)
    assert not certify_radical(Ideal(vars, parse_many(["x + 1"], vars)), P, 5)
    with pytest.raises(CertificateError):
        certify_radical(I, Ideal(vars, parse_many(["x^2"], vars)), 2)


def test_certify_intersection():
    vars = XY
    I = Ideal(vars, parse_many(["x*y", "x^2 - x", "y^2 - y"], vars))
    primes = [Ideal(vars, parse_many(p, vars)) for p in (["x", "y"], ["x - 1", "y"], ["x", "y - 1"])]
    ok, J = certify_radical_intersection(I, primes, 2)
    assert ok and ideal_equal(J, I)
    ok, _ = certify_radical_intersection(I, primes[:2], 2)
    assert not ok


@st.composite
def commuting_diagonalizable(draw):
    r = draw(st.integers(2, 3))
    n = draw(st.integers(1, 2))
    P = sympy.Matrix(r, r, draw(st.lists(st.integers(-2, 2), min_size=r * r, max_size=r * r)))
    if P.det() == 0:
        P = sympy.eye(r)
    eig = [draw(st.lists(st.integers(-3, 3), min_size=r, max_size=r)) for _ in range(n)]
    mats = [P * sympy.diag(*e) * P.inv() for e in eig]
    return mats, eig


@settings(max_examples=30, deadline=None)
@given(commuting_diagonalizable())
def test_eigenvalue_tuples_lie_on_spectral_cover(data):
    mats, eig = data
    n, r = len(mats), mats[0].shape[0]
    base = tuple(f"x{i}" for i in range(1, n + 1))
    q = lambda a: Poly.const(base, Fraction(int(a.p), int(a.q)))
    H = validate_higgs([[[q(M[i, j]) for j in range(r)] for i in range(r)] for M in mats], base)
    S = spectral_ideal(H)
    points = {tuple(eig[h][i] for h in range(n)) for i in range(r)}
    for pt in points:
        bind = dict(zip(S.l_vars, pt))
        bind.update({v: 0 for v in base})
        assert all(evaluate(g, bind) == 0 for g in S.ideal.gens)
    # distinct joint eigenvalues give a reduced fiber of r points
    deg = spectral_fiber_degree(S, [0] * n)
    assert len(points) <= deg
    if len(points) == r:
        assert deg == r
