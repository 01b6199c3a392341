import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeauto.algebra.field import RATIONALS, FieldSpec
from planeauto.algebra.parser import parse_poly
from planeauto.algebra.plane_poly import PlanePoly
from planeauto.automorphisms.henon import (
    HenonFactor,
    HenonForm,
    as_henon,
    classify,
    henon_normal_form,
)
from planeauto.automorphisms.jung import invert_map
from planeauto.automorphisms.polymap import (
    PolyMap,
    compose_maps,
    degree_sequence,
    dynamical_degree_estimate,
)
from planeauto.exceptions import FieldExtensionNeeded, InvalidInput, NotLoxodromic
from tests.utils import henon


def conjugated(form: HenonForm, f: PolyMap) -> bool:
    return compose_maps(form.conjugator, f) == compose_maps(form.to_map(), form.conjugator)


@pytest.mark.parametrize(
    "a, p",
    [
        (0, "x^2"),
        (1, "x"),
        (1, "x^2 + y"),
    ],
)
def test_bad_henon_factors(a, p):
    with pytest.raises(InvalidInput):
        HenonFactor(RATIONALS.element(a), parse_poly(p, RATIONALS))


def test_henon_factor_maps():
    factor = HenonFactor(RATIONALS.element(2), parse_poly("x^2 - 1", RATIONALS))
    assert factor.to_map() == PolyMap.from_strings("2*y + x^2 - 1", "x")
    assert compose_maps(factor.inverse_map(), factor.to_map()).is_identity()


def test_henon_form_invariants():
    form = henon((2, "x^2"), (-1, "x^3"))
    assert form.degree == 6
    assert form.lambda1 == 6
    # Each factor has Jacobian -a.
    assert form.jacobian_constant == (-2) * 1
    assert form.to_map().constant_jacobian() == form.jacobian_constant
    assert compose_maps(form.inverse_map(), form.to_map()).is_identity()


def test_classify_elliptic():
    result = classify(PolyMap.from_strings("2*x + y^3", "3*y + 1"))
    assert result.kind == "elliptic"
    assert result.lambda1 == 1
    data = result.to_json()
    assert data["class"] == "elliptic"
    assert data["witness"]["subgroup"] == "elementary"


def test_classify_affine_is_elliptic():
    result = classify(PolyMap.from_strings("x + y", "y"))
    assert result.kind == "elliptic"
    assert result.to_json()["witness"]["subgroup"] == "affine"


def test_classify_cubic_shift(cubic_shift: PolyMap):
    result = classify(cubic_shift)
    assert result.kind == "loxodromic"
    assert result.lambda1 == 3
    assert result.is_loxodromic
    assert result.to_json()["witness"]["henon_form"]["degree"] == 3


def test_normal_form_of_cubic_shift(cubic_shift: PolyMap):
    form = henon_normal_form(cubic_shift)
    assert len(form.factors) == 1
    assert form.factors[0].p == parse_poly("x^3", RATIONALS)
    assert form.jacobian_constant == -1
    assert conjugated(form, cubic_shift)


def test_composition_of_henon_maps():
    f = henon((1, "x^2"), (1, "x^3")).to_map()
    result = classify(f)
    assert result.kind == "loxodromic"
    assert result.lambda1 == 6


def test_lambda1_is_a_conjugacy_invariant(cubic_shift: PolyMap):
    a = PolyMap.from_strings("2*x + y + 1", "x - y")
    g = compose_maps(compose_maps(a, cubic_shift), invert_map(a))
    form = henon_normal_form(g)
    assert form.lambda1 == 3
    assert form.jacobian_constant == -1
    assert conjugated(form, g)


def test_elliptic_maps_have_no_normal_form():
    with pytest.raises(NotLoxodromic):
        henon_normal_form(PolyMap.from_strings("x + y^2", "y"))


def test_monic_normal_form():
    f = PolyMap.from_strings("y", "x + 4*y^3")
    form = henon_normal_form(f, monic=True)
    assert form.factors[0].leading_coefficient == 1
    assert conjugated(form, f)


def test_monic_normal_form_needs_square_root():
    f = PolyMap.from_strings("y", "x + 2*y^3")
    with pytest.raises(FieldExtensionNeeded) as e:
        henon_normal_form(f, monic=True)
    assert e.value.minpoly == [-2, 0, 1]


def test_monic_normal_form_over_extension():
    sqrt2 = FieldSpec.extension([-2, 0, 1])
    f = PolyMap.from_strings("y", "x + 2*y^3", sqrt2)
    form = henon_normal_form(f, monic=True)
    assert form.factors[0].leading_coefficient == 1
    assert conjugated(form, f)


def test_as_henon(cubic_henon: HenonForm, cubic_shift: PolyMap):
    assert as_henon(cubic_henon) is cubic_henon
    assert as_henon(cubic_shift).degree == 3
    with pytest.raises(TypeError):
        as_henon("y, x + y^3")


def _nonzero(coeffs: dict) -> dict:
    return {e: c for e, c in coeffs.items() if c}


@st.composite
def conjugated_henon_words(draw):
    """a∘(h_k∘…∘h₁)∘a⁻¹ for Hénon factors h = (c·y + p(x), x) and a shear a; returns (map, Π deg p)."""
    spec = RATIONALS
    degrees = draw(st.sampled_from([(2,), (3,), (2, 2)]))
    small = st.integers(-2, 2)
    f = PolyMap.identity(spec)
    for degree in degrees:
        p = PlanePoly(
            spec,
            _nonzero(
                {
                    (0, 1): draw(st.sampled_from([1, -1, 2])),
                    (degree, 0): draw(st.sampled_from([1, -1, 2])),
                    (1, 0): draw(small),
                }
            ),
        )
        f = compose_maps(PolyMap(p, parse_poly("x", spec), spec), f)
    shear = PolyMap(
        PlanePoly(spec, _nonzero({(1, 0): 1, (0, 1): draw(small), (0, 0): draw(small)})),
        parse_poly("y", spec),
        spec,
    )
    return compose_maps(compose_maps(shear, f), invert_map(shear)), math.prod(degrees)


@settings(max_examples=15, deadline=None)
@given(conjugated_henon_words())
def test_lambda1_matches_the_degree_growth(case):
    f, expected = case
    result = classify(f)
    assert result.is_loxodromic
    assert result.lambda1 == expected
    assert degree_sequence(f, 3) == [expected, expected**2, expected**3]
    assert dynamical_degree_estimate(f, 3) == pytest.approx(expected, rel=1e-9)
