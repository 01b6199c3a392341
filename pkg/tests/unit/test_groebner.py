from fractions import Fraction

import pytest

from planeauto.algebra.field import RATIONALS
from planeauto.algebra.groebner import (
    GroebnerCaps,
    eliminant,
    groebner_basis,
    is_zero_dimensional,
    normal_form,
    rational_points,
    s_polynomial,
    standard_monomials,
)
from planeauto.algebra.multipoly import PolyRing
from planeauto.exceptions import UndecidedAtCap


@pytest.fixture
def ring() -> PolyRing:
    return PolyRing(["x", "y"], RATIONALS)


def test_s_polynomials_reduce_to_zero(ring: PolyRing):
    x, y = ring.gens()
    result = groebner_basis([x**2 + y, x * y - 1])
    for i, f in enumerate(result.basis):
        for g in result.basis[i + 1 :]:
            assert not normal_form(s_polynomial(f, g), result.basis)
    # The generators lie in the ideal.
    assert not normal_form(x**2 + y, result.basis)
    assert not normal_form(x * y - 1, result.basis)


def test_trivial_ideal(ring: PolyRing):
    x, _ = ring.gens()
    result = groebner_basis([x, x - 1])
    assert result.is_trivial
    assert rational_points([x, x - 1]).trivial


def test_zero_dimensional(ring: PolyRing):
    x, y = ring.gens()
    result = groebner_basis([x**2 - 1, y - x])
    assert is_zero_dimensional(result)
    assert len(standard_monomials(result)) == 2
    assert not is_zero_dimensional(groebner_basis([x * y]))


def test_eliminant(ring: PolyRing):
    x, y = ring.gens()
    result = groebner_basis([x**2 - 2, y - x])
    assert eliminant(result, 1) == [-2, 0, 1]


def test_eliminant_degree_cap(ring: PolyRing):
    x, y = ring.gens()
    result = groebner_basis([x**3 - 2, y - x])
    with pytest.raises(UndecidedAtCap) as e:
        eliminant(result, 0, degree_cap=2)
    assert e.value.cap == "eliminant_degree"


def test_pair_cap(ring: PolyRing):
    x, y = ring.gens()
    with pytest.raises(UndecidedAtCap) as e:
        groebner_basis([x**2 + y, x * y - 1], GroebnerCaps(max_pairs=0))
    assert e.value.cap == "pairs"
    assert e.value.limit == 0


def test_rational_points(ring: PolyRing):
    x, y = ring.gens()
    search = rational_points([x**2 - 1, y - x])
    assert sorted(tuple(p) for p in search.points) == [(-1, -1), (1, 1)]
    assert not search.residuals
    assert not search.trivial


def test_single_point(ring: PolyRing):
    x, y = ring.gens()
    search = rational_points([x - 1, 2 * y - 1])
    assert search.points == [[1, Fraction(1, 2)]]


def test_irrational_branches_become_residuals():
    ring = PolyRing(["x"], RATIONALS)
    (x,) = ring.gens()
    search = rational_points([x**2 - 2])
    assert search.points == []
    assert len(search.residuals) == 1
    residual = search.residuals[0].dict()
    assert residual["variable"] == "x"
    assert residual["eliminant"] == ["-2", "0", "1"]
    assert residual["kind"] == "irrational"


def test_mixed_rational_and_irrational_roots():
    ring = PolyRing(["x"], RATIONALS)
    (x,) = ring.gens()
    search = rational_points([(x - 3) * (x**2 - 2)])
    assert search.points == [[3]]
    assert [r.eliminant for r in search.residuals] == [["-2", "0", "1"]]


def test_roots_in_the_extension_field(sqrt2):
    ring = PolyRing(["x"], sqrt2)
    (x,) = ring.gens()
    theta = sqrt2.gen()
    search = rational_points([x * (x - theta)])
    assert [p[0] for p in search.points] == [sqrt2.zero(), theta]
    assert search.residuals == []
    # A rational eliminant can still split over the extension.
    search = rational_points([x**2 - 2])
    assert [p[0] for p in search.points] == [-theta, theta]


def test_extension_branches_carry_every_root(sqrt2):
    ring = PolyRing(["x", "y"], sqrt2)
    x, y = ring.gens()
    theta = sqrt2.gen()
    search = rational_points([(x - theta) * (x - 1) * (x**2 - 3), y - x])
    assert search.points == [[theta, theta], [1, 1]]
    (residual,) = search.residuals
    assert residual.variable == "x"
    assert len(residual.eliminant) == 3
