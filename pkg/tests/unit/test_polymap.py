import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planeauto.algebra.field import RATIONALS
from planeauto.algebra.plane_poly import PlanePoly, poly_compose2
from planeauto.automorphisms.polymap import (
    PolyMap,
    compose_maps,
    degree_sequence,
    dynamical_degree_estimate,
    iterate,
    jacobian_det,
)
from planeauto.exceptions import InvalidInput
from tests.utils import henon


def test_constant_maps_are_rejected():
    with pytest.raises(InvalidInput):
        PolyMap.from_strings("1", "2")


def test_json():
    f = PolyMap.from_strings("y", "x + y^3")
    assert f.to_json() == {"field": "Q", "x": "y", "y": "y^3 + x"}
    assert PolyMap.from_json(f.to_json()) == f
    assert PolyMap.from_json({"x": "y", "y": "x"}) == PolyMap.from_strings("y", "x")


def test_json_missing_component():
    with pytest.raises(InvalidInput):
        PolyMap.from_json({"field": "Q", "x": "y"})


def test_composition_order():
    f = PolyMap.from_strings("x + y^2", "y")
    g = PolyMap.from_strings("y", "x")
    assert compose_maps(f, g) == PolyMap.from_strings("y + x^2", "x")
    assert f @ g == f.compose(g)


def test_identity_and_iterates():
    f = PolyMap.from_strings("y", "x + y^3")
    assert iterate(f, 0).is_identity()
    assert iterate(f, 1) == f
    assert iterate(f, 2) == compose_maps(f, f)
    with pytest.raises(ValueError):
        iterate(f, -1)


def test_jacobian():
    f = PolyMap.from_strings("y", "x + y^3")
    det, constant = jacobian_det(f)
    assert det == -1
    assert constant
    assert f.constant_jacobian() == -1
    det, constant = jacobian_det(PolyMap.from_strings("x^2", "y"))
    assert det == PlanePoly.monomial(RATIONALS, 1, 0, 2)
    assert not constant


def test_degree_sequence_of_cubic_shift(cubic_shift: PolyMap):
    assert degree_sequence(cubic_shift, 3) == [3, 9, 27]


def test_degrees_of_henon_compositions_multiply():
    f = henon((1, "x^2"), (1, "x^3")).to_map()
    assert f.degree == 6
    assert dynamical_degree_estimate(f, 2) == pytest.approx(6.0)


def test_eval_complex(cubic_shift: PolyMap):
    assert cubic_shift.eval_complex(1.0, 2.0) == pytest.approx((2.0, 9.0))


monomials = st.dictionaries(st.integers(0, 3), st.integers(-3, 3), max_size=3)


@st.composite
def triangular_maps(draw):
    """(a·x + p(y), b·y + c), always an automorphism."""
    a = draw(st.sampled_from([1, -1, 2, 3]))
    b = draw(st.sampled_from([1, -1, 2]))
    c = draw(st.integers(-2, 2))
    p = PlanePoly(RATIONALS, {(0, k): v for k, v in draw(monomials).items()})
    x, y = PlanePoly.x(RATIONALS), PlanePoly.y(RATIONALS)
    f = PolyMap(x.scale(a) + p, y.scale(b) + c)
    if draw(st.booleans()):
        f = compose_maps(PolyMap(y, x), f)
    return f


@settings(max_examples=50)
@given(triangular_maps(), triangular_maps())
def test_chain_rule(f, g):
    composite = compose_maps(f, g)
    expected = poly_compose2(f.jacobian(), g.p, g.q) * g.jacobian()
    assert composite.jacobian() == expected
