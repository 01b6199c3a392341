import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeauto.algebra.field import RATIONALS
from planeauto.algebra.plane_poly import PlanePoly
from planeauto.automorphisms.jung import (
    AffineFactor,
    ElementaryFactor,
    cyclically_reduce,
    factor_from_json,
    invert_map,
    is_automorphism,
    jung_decompose,
    recompose,
    reduce_word,
)
from planeauto.automorphisms.polymap import PolyMap, compose_maps
from planeauto.exceptions import NotAnAutomorphism


def test_affine_map_is_a_single_factor():
    f = PolyMap.from_strings("2*x + y", "x - y + 1")
    word = jung_decompose(f)
    assert word.kinds == ["affine"]
    assert recompose(word) == f


def test_quadratic_shift():
    f = PolyMap.from_strings("y", "x + y^2")
    word = jung_decompose(f)
    assert word.kinds == ["affine", "elementary"]
    assert word.is_alternating()
    assert recompose(word) == f


def test_triangular_map_is_elementary():
    f = PolyMap.from_strings("2*x + y^3", "3*y + 1")
    word = jung_decompose(f)
    assert word.kinds == ["elementary"]
    assert recompose(word) == f


@pytest.mark.parametrize(
    "x, y",
    [
        ("x^2", "y"),
        ("x + y^2", "x + y^2 + 1"),
        ("x*y", "y"),
    ],
)
def test_non_automorphisms(x, y):
    f = PolyMap.from_strings(x, y)
    assert not is_automorphism(f)
    with pytest.raises(NotAnAutomorphism):
        jung_decompose(f)


@pytest.mark.parametrize(
    "x, y, inverse_x, inverse_y",
    [
        ("y", "x + y^2", "y - x^2", "x"),
        ("2*x + 1", "3*y", "x/2 - 1/2", "y/3"),
        ("x", "y", "x", "y"),
    ],
)
def test_invert(x, y, inverse_x, inverse_y):
    f = PolyMap.from_strings(x, y)
    assert invert_map(f) == PolyMap.from_strings(inverse_x, inverse_y)


def test_merging_adjacent_factors():
    spec = RATIONALS
    y = PlanePoly.y(spec)
    shear = ElementaryFactor.shear(spec, y**2)
    word = reduce_word([shear, ElementaryFactor.shear(spec, -(y**2) + y)], spec)
    assert word.kinds == ["affine"]
    assert recompose(word) == PolyMap.from_strings("x + y", "y")


def test_cyclic_reduction_conjugates():
    f = PolyMap.from_strings("y", "x + y^3")
    reduction = cyclically_reduce(jung_decompose(f))
    assert reduction.word.kinds[0] == "elementary"
    assert compose_maps(reduction.conjugator, reduction.conjugator_inverse).is_identity()
    conjugated = compose_maps(compose_maps(reduction.conjugator, f), reduction.conjugator_inverse)
    assert recompose(reduction.word) == conjugated


def test_factor_json():
    spec = RATIONALS
    affine = AffineFactor.swap(spec)
    elementary = ElementaryFactor(spec.element(2), PlanePoly.y(spec) ** 3, spec.one(), spec.element(5))
    assert elementary.to_json() == {
        "type": "elementary",
        "alpha": "2",
        "beta": "1",
        "gamma": "5",
        "p": "y^3",
    }
    assert factor_from_json(affine.to_json(), spec).to_map() == affine.to_map()
    assert factor_from_json(elementary.to_json(), spec).to_map() == elementary.to_map()


@st.composite
def words(draw):
    """Alternating products of swaps with random elementary factors of degree ≥ 2."""
    spec = RATIONALS
    swap = AffineFactor.swap(spec).to_map()
    f = PolyMap.identity(spec)
    for _ in range(draw(st.integers(1, 3))):
        degree = draw(st.integers(2, 3))
        coeffs = {(0, degree): draw(st.sampled_from([1, -1, 2]))}
        coeffs[(0, 1)] = draw(st.integers(-2, 2))
        p = PlanePoly(spec, coeffs)
        alpha = draw(st.sampled_from([1, -1, 2]))
        factor = ElementaryFactor(spec.element(alpha), p, spec.one(), spec.element(draw(st.integers(-1, 1))))
        f = compose_maps(compose_maps(swap, factor.to_map()), f)
    return f


@settings(max_examples=25, deadline=None)
@given(words())
def test_decompose_recompose(f):
    word = jung_decompose(f)
    assert word.is_alternating()
    assert recompose(word) == f


@settings(max_examples=25, deadline=None)
@given(words())
def test_inverse_composes_to_identity(f):
    assert compose_maps(invert_map(f), f).is_identity()
