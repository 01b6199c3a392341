from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planeauto.algebra.field import RATIONALS, FieldSpec, field_arith, lift
from planeauto.exceptions import DivisionByZero, InvalidInput, SpecMismatch

small = st.integers(min_value=-20, max_value=20)
pairs = st.tuples(small, small)
SQRT2 = FieldSpec.extension([-2, 0, 1])


def test_rationals_json():
    assert RATIONALS.to_json() == "Q"
    assert FieldSpec.from_json("QQ") == RATIONALS
    assert FieldSpec.from_json(None).is_rationals


def test_extension_json(sqrt2: FieldSpec):
    assert sqrt2.to_json() == {"minpoly": [-2, 0, 1], "root": 0}
    assert FieldSpec.from_json({"minpoly": [-2, 0, 1]}) == sqrt2


@pytest.mark.parametrize(
    "minpoly, root",
    [
        ([-1, 0, 1], 0),  # (t - 1)(t + 1)
        ([2, 0, 2], 0),  # not monic
        ([1, 1], 0),  # degree one
        ([-2, 0, 1], 2),  # root index out of range
    ],
)
def test_bad_extensions(minpoly, root):
    with pytest.raises(InvalidInput):
        FieldSpec.extension(minpoly, root)


def test_root_order(sqrt2: FieldSpec):
    """Roots are sorted by decreasing real part, so root 0 of t^2 - 2 is the positive one."""
    assert sqrt2.embedding_root().real == pytest.approx(1.41421356)
    other = FieldSpec.extension([-2, 0, 1], root=1)
    assert other.embedding_root().real == pytest.approx(-1.41421356)


def test_generator_arithmetic(sqrt2: FieldSpec):
    theta = sqrt2.gen()
    assert theta * theta == 2
    assert 1 / theta == theta / 2
    assert theta**-2 == Fraction(1, 2)
    assert (theta + 1).embed().real == pytest.approx(2.41421356)
    assert str(theta + 1) == "t + 1"
    assert (theta / 2).to_json() == ["0", "1/2"]


def test_rationals_have_no_generator():
    with pytest.raises(InvalidInput):
        RATIONALS.gen()


def test_inverse_of_zero(sqrt2: FieldSpec):
    with pytest.raises(DivisionByZero):
        sqrt2.zero().inverse()
    with pytest.raises(ZeroDivisionError):
        RATIONALS.one() / 0


def test_rationals_promote_into_extensions(sqrt2: FieldSpec):
    half = RATIONALS.element(Fraction(1, 2))
    product = half * sqrt2.gen()
    assert product.spec == sqrt2
    assert product.to_json() == ["0", "1/2"]
    assert lift(half, sqrt2) == Fraction(1, 2)


def test_mixed_extensions_raise(sqrt2: FieldSpec):
    sqrt3 = FieldSpec.extension([-3, 0, 1])
    with pytest.raises(SpecMismatch):
        sqrt2.gen() + sqrt3.gen()
    with pytest.raises(SpecMismatch):
        field_arith("mul", sqrt2.one(), sqrt3.one())
    with pytest.raises(SpecMismatch):
        lift(sqrt3.gen(), sqrt2)


def test_element_from_json(sqrt2: FieldSpec):
    element = sqrt2.element(["1", "-3/4"])
    assert element == sqrt2.one() - sqrt2.gen() * Fraction(3, 4)
    assert element.from_json(sqrt2, element.to_json()) == element


def test_reduction_modulo_minpoly():
    cube_root = FieldSpec.extension([-2, 0, 0, 1])
    theta = cube_root.gen()
    assert theta**3 == 2
    assert (theta**4).to_json() == ["0", "2", "0"]


@given(pairs, pairs, pairs)
def test_field_axioms(a, b, c):
    spec = SQRT2
    u, v, w = spec.element(list(a)), spec.element(list(b)), spec.element(list(c))
    assert (u + v) * w == u * w + v * w
    assert (u * v) * w == u * (v * w)
    assert u - u == 0


@given(pairs)
def test_inverse_property(a):
    spec = SQRT2
    u = spec.element(list(a))
    if u:
        assert u * u.inverse() == 1
