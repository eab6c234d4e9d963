import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracle import sympy_basis, to_sympy
from higgsgrass import Poly, parse_poly
from higgsgrass.grobner import (
    DegreeDisagreement,
    Ideal,
    NotSquarefreeMonomial,
    NotZeroDimensional,
    ResourceLimit,
    affine_colength,
    eliminate,
    ideal_equal,
    ideal_intersect,
    ideal_member,
    ideal_subset,
    is_reduced_basis,
    monomial_minimal_primes,
    normal_form,
    point_count,
    projective_degree,
    radical_member,
    saturate,
    spolys_reduce_to_zero,
    start_stats,
)
from higgsgrass.parsing import parse_many
from higgsgrass.polyring import GREVLEX, LEX, elimination_order

XY = ("x", "y")
XYZ = ("x", "y", "z")


def ideal(texts, vars=XY, order=GREVLEX):
    return Ideal(vars, parse_many(texts, vars), order)


def test_small_basis():
    I = ideal(["x - 1", "x*y"])
    assert {str(g) for g in I.basis} == {"x - 1", "y"}
    assert is_reduced_basis(I.basis, GREVLEX)


def test_membership_examples():
    v = ("x", "z1", "z2")
    I = Ideal(v, parse_many(["z1^2 - x*z2^2"], v))
    assert not ideal_member(parse_poly("z2", v), I)
    assert ideal_member(parse_poly("x*z1^2 - x^2*z2^2", v), I)
    assert normal_form(parse_poly("x*z2^2", v), I) == parse_poly("z1^2", v)


def test_radical_member_examples():
    I = ideal(["x^2", "y^3"])
    assert radical_member(parse_poly("x + y", XY), I)
    assert not ideal_member(parse_poly("x + y", XY), I)
    assert not radical_member(parse_poly("x + 1", XY), I)
    assert radical_member(Poly.zero(XY), I)


def test_unit_and_zero_ideal():
    assert ideal(["x", "x - 1"]).is_unit()
    Z = Ideal(XY, [])
    assert Z.is_zero() and Z.basis == []
    assert ideal_member(Poly.zero(XY), Z)


def test_intersection_and_saturation():
    I, J = ideal(["x"]), ideal(["y"])
    assert ideal_equal(ideal_intersect(I, J), ideal(["x*y"]))
    K = ideal(["x^2*y", "x*y^2"])
    assert ideal_equal(saturate(K, parse_poly("x", XY)), ideal(["y"]))


def test_eliminate():
    I = ideal(["x - y^2", "y^3 - 2"])
    E = eliminate(I, ["y"])
    assert E.vars == ("x",)
    assert ideal_equal(E, Ideal(("x",), [parse_poly("x^3 - 4", ("x",))]))


def test_colength_and_points():
    I = ideal(["x^2", "y^2 - y"])
    assert affine_colength(I) == 4
    assert point_count(I) == 2
    with pytest.raises(NotZeroDimensional):
        affine_colength(ideal(["x^2"]))


def test_projective_degree_rational_normal_curves():
    # points of a single Jordan block fiber: z_2 = ... = z_r = 0 doubled up to r
    for r in range(2, 7):
        zs = tuple(f"z{i}" for i in range(1, r + 1))
        gens = [Poly.var(zs, zs[i]) * Poly.var(zs, zs[j]) for i in range(1, r) for j in range(i, r)]
        assert projective_degree(Ideal(zs, gens), list(zs), seed=r) == r


def test_projective_degree_groups_and_errors():
    v = ("a0", "a1", "b0", "b1")
    I = Ideal(v, parse_many(["a0*b1 - a1*b0", "a1^2"], v))
    assert projective_degree(I, [["a0", "a1"], ["b0", "b1"]]) == 2
    with pytest.raises(Exception):
        projective_degree(Ideal(v, parse_many(["a0 + 1"], v)), [["a0", "a1"], ["b0", "b1"]])


def test_minimal_primes_triangle():
    v = ("a", "b", "c")
    I = Ideal(v, parse_many(["a*b", "b*c", "a*c"], v))
    primes = monomial_minimal_primes(I)
    assert [[str(g) for g in P.gens] for P in primes] == [["a", "b"], ["a", "c"], ["b", "c"]]
    with pytest.raises(NotSquarefreeMonomial):
        monomial_minimal_primes(Ideal(v, parse_many(["a^2"], v)))
    with pytest.raises(NotSquarefreeMonomial):
        monomial_minimal_primes(Ideal(v, parse_many(["a + b"], v)))


def test_budget(monkeypatch):
    monkeypatch.setenv("HIGGSGRASS_SPAIR_BUDGET", "1")
    with pytest.raises(ResourceLimit):
        ideal(["x^3 - y", "x*y^2 - x", "y^3 - x^2"], XY).basis


def test_stats_collected():
    stats = start_stats()
    ideal(["x^2 - y", "x*y - 1"]).basis
    assert stats["groebner_calls"] == 1 and stats["s_pairs_processed"] >= 1


# --- properties against sympy -------------------------------------------------

coeff = st.integers(-3, 3)
mono = st.tuples(*[st.integers(0, 2)] * 3)
poly3 = st.dictionaries(mono, coeff, min_size=1, max_size=3).map(lambda d: Poly(XYZ, d))


@settings(max_examples=40, deadline=None)
@given(st.lists(poly3, min_size=1, max_size=3), st.sampled_from(["grevlex", "lex"]))
def test_basis_matches_sympy(polys, order):
    polys = [p for p in polys if p]
    if not polys:
        return
    I = Ideal(XYZ, polys, GREVLEX if order == "grevlex" else LEX)
    ours = {to_sympy(g).monic() for g in I.basis}
    assert ours == sympy_basis(polys, XYZ, order)
    assert spolys_reduce_to_zero(I.basis, I.order)
    assert is_reduced_basis(I.basis, I.order)


@settings(max_examples=25, deadline=None)
@given(st.lists(poly3, min_size=1, max_size=2), st.lists(poly3, min_size=1, max_size=2))
def test_intersection_contained(a, b):
    I, J = Ideal(XYZ, a), Ideal(XYZ, b)
    K = ideal_intersect(I, J)
    assert ideal_subset(K, I) and ideal_subset(K, J)
    # products always lie in the intersection
    assert all(ideal_member(f * g, K) for f in I.gens for g in J.gens)


@settings(max_examples=40, deadline=None)
@given(st.lists(poly3, min_size=1, max_size=3), poly3, poly3)
def test_normal_form_linear_and_idempotent(polys, p, q):
    I = Ideal(XYZ, polys)
    nf = normal_form(p, I)
    assert normal_form(nf, I) == nf
    assert normal_form(p + 3 * q, I) == nf + 3 * normal_form(q, I)
    assert ideal_member(p - nf, I)


@given(st.lists(st.frozensets(st.integers(0, 4), min_size=1, max_size=3), min_size=1, max_size=5))
def test_monomial_primes_intersection(supports):
    vars = tuple(f"v{i}" for i in range(5))
    gens = []
    for s in supports:
        e = tuple(1 if i in s else 0 for i in range(5))
        gens.append(Poly(vars, {e: 1}))
    I = Ideal(vars, gens)
    primes = monomial_minimal_primes(I)
    assert ideal_equal(I, Ideal(vars, gens)) and len(primes) >= 1
    from higgsgrass.grobner import intersect_all

    assert ideal_equal(intersect_all(primes), I)
    for P in primes:
        assert ideal_subset(I, P)
