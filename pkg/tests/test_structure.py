import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from higgsgrass import Poly, parse_poly
from higgsgrass.grasseq import rank1_ideal
from higgsgrass.grobner import Ideal, ideal_equal, ideal_subset, intersect_all
from higgsgrass.matrices import jordan_block
from higgsgrass.higgsfield import validate_higgs
from higgsgrass.parsing import parse_many
from higgsgrass.structure import (
    SpecError,
    classify_morphism,
    component_ideals,
    decompose_by_eigenvalue,
    family,
    jordan_spec_sets,
    make_spec,
    predicted_ideal,
    single_block_ideal,
    spec_field,
    sv_ideal,
    sv_parametrization_check,
)

X = ("x",)


def test_family_sets_and_errors():
    F = family([(1, 2, 3), (4, 5)], 6)
    assert F.B == (2, 3, 5) and F.C == (3, 5) and F.L == (6,)
    with pytest.raises(SpecError):
        family([(1, 2), (2, 3)], 3)
    with pytest.raises(SpecError):
        family([(0, 1)], 3)
    with pytest.raises(SpecError):
        family([()], 3)


def test_spec_validation():
    with pytest.raises(SpecError):
        make_spec(X, [])
    with pytest.raises(SpecError):
        make_spec(X, [(0, 0, 1)])
    with pytest.raises(SpecError):
        make_spec(X, [(0, 2, 1), (0, 2, 1)])
    spec = make_spec(X, [(1, 1, 1), (0, 2, 1), (1, 3, 1)])
    assert spec.r == 6
    assert [(str(l), i) for l, i, _ in spec.canonical().blocks] == [("1", 3), ("1", 1), ("0", 2)]


def test_sets_need_decreasing_sizes():
    with pytest.raises(SpecError):
        jordan_spec_sets(make_spec(X, [(0, 1, 1), (1, 2, 1)]))


def test_single_block_ideal_r3():
    I = single_block_ideal(3)
    z = I.vars
    assert ideal_equal(I, Ideal(z, parse_many(["z1*z3 - z2^2", "z2*z3", "z3^2"], z)))


def test_single_mode_matches_equations():
    for r in range(1, 6):
        spec = make_spec(X, [(parse_poly("x", X), r, 1)])
        assert ideal_equal(predicted_ideal(spec, "single"), rank1_ideal(spec_field(spec)).ideal)
    with pytest.raises(SpecError):
        predicted_ideal(make_spec(X, [(0, 2, 2)]), "single")


def test_sv_ideal_and_parametrization():
    A = [(1, 2, 3), (4, 5, 6)]
    I = sv_ideal(A, 6)
    assert len(I.gens) == 6  # 2x2 minors of a 2x4 matrix
    assert sv_parametrization_check(A, 6, 2)
    assert sv_parametrization_check([(1, 2), (3, 4), (5, 6)], 6, 3)
    with pytest.raises(SpecError):
        sv_parametrization_check([(1, 2, 3), (4, 5)], 5, 2)
    with pytest.raises(SpecError):
        sv_parametrization_check(A, 6, 3)


def test_component_bookkeeping():
    spec = make_spec(X, [(0, 4, 1), (0, 2, 2), (0, 1, 1)])
    comps = component_ideals(spec)
    assert [(c.v, c.dimension, c.fiber_degree) for c in comps] == [(1, 0, 4), (2, 2, 2), (3, 3, 1)]
    with pytest.raises(SpecError):
        predicted_ideal(spec, "component", 4)
    with pytest.raises(SpecError):
        predicted_ideal(spec, "nonsense")
    with pytest.raises(SpecError):
        predicted_ideal(make_spec(X, [(0, 2, 1), (1, 1, 1)]), "full")


def test_decompose_by_eigenvalue():
    spec = make_spec(X, [(0, 2, 1), (1, 1, 2)])
    parts = decompose_by_eigenvalue(spec)
    assert [str(l) for l, _ in parts] == ["0", "1"]
    I = rank1_ideal(spec_field(spec)).ideal
    assert ideal_equal(intersect_all([J for _, J in parts]), I)


def test_classify_morphism():
    assert classify_morphism(make_spec(X, [(0, 1, 1), (1, 1, 1)])) == {"finite": True, "reduced": True}
    assert classify_morphism(make_spec(X, [(0, 2, 1), (1, 1, 1)])) == {"finite": True, "reduced": False}
    assert classify_morphism(make_spec(X, [(0, 1, 2)])) == {"finite": False, "reduced": True}


@st.composite
def one_eigenvalue_spec(draw):
    r = draw(st.integers(1, 5))
    parts, left = {}, r
    while left:
        i = draw(st.integers(1, left))
        parts[i] = parts.get(i, 0) + 1
        left -= i
    lam = draw(st.sampled_from(["0", "2", "x", "x - 3"]))
    return make_spec(X, [(parse_poly(lam, X), i, m) for i, m in parts.items()])


@settings(max_examples=30, deadline=None)
@given(one_eigenvalue_spec())
def test_prediction_matches_equations(spec):
    I = rank1_ideal(spec_field(spec)).ideal
    assert ideal_equal(I, predicted_ideal(spec, "full"))
    comps = component_ideals(spec)
    for c in comps:
        assert ideal_subset(I, c.ideal)
    assert ideal_equal(intersect_all([c.ideal for c in comps]), I)
