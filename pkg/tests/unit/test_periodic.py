import math

import pytest

from planeauto.automorphisms.henon import HenonForm
from planeauto.automorphisms.jung import invert_map
from planeauto.automorphisms.polymap import PolyMap, compose_maps
from planeauto.dynamics.periodic import (
    canonical_pair,
    classify_multipliers,
    compare_spectra,
    multiplier_spectrum,
    periodic_points,
)
from planeauto.exceptions import ResourceCapExceeded

SQRT2 = math.sqrt(2)


@pytest.mark.parametrize(
    "m1, m2, kind",
    [
        (0.5, 3.0, "saddle"),
        (0.5, 0.2j, "attracting"),
        (-2.0, 4.0, "repelling"),
        (1.0, -1.0, "neutral"),
        (1.0, 2.0, "mixed"),
    ],
)
def test_classify_multipliers(m1, m2, kind):
    assert classify_multipliers(m1, m2) == kind


def test_canonical_pair_is_order_free():
    assert canonical_pair(3.0, 0.5) == canonical_pair(0.5, 3.0)


def test_fixed_points_of_quadratic_henon(quadratic_henon: HenonForm):
    orbits = periodic_points(quadratic_henon, 1)
    assert len(orbits) == 2
    points = sorted((round(o.points[0][0].real, 9), round(o.points[0][1].real, 9)) for o in orbits)
    assert points == [(-1.0, -1.0), (1.0, 1.0)]
    for orbit in orbits:
        assert orbit.type == "saddle"
        m1, m2 = orbit.multipliers
        # The Jacobian determinant is -1 everywhere.
        assert m1 * m2 == pytest.approx(-1)
    multipliers = sorted(m.real for o in orbits for m in o.multipliers)
    expected = sorted([1 + SQRT2, 1 - SQRT2, -1 + SQRT2, -1 - SQRT2])
    assert multipliers == pytest.approx(expected)


def test_period_two_orbit(quadratic_henon: HenonForm):
    orbits = periodic_points(quadratic_henon, 2)
    assert sorted(o.period for o in orbits) == [1, 1, 2]
    (cycle,) = [o for o in orbits if o.period == 2]
    rounded = sorted((round(x.real, 9), round(y.real, 9)) for x, y in cycle.points)
    assert rounded == [(-1.0, 1.0), (1.0, -1.0)]
    m1, m2 = cycle.multipliers
    assert m1 * m2 == pytest.approx(1)
    assert cycle.to_json()["period"] == 2


def test_degenerate_fixed_point(cubic_henon: HenonForm):
    (orbit,) = periodic_points(cubic_henon, 1)
    x, y = orbit.points[0]
    assert abs(x) < 1e-9 and abs(y) < 1e-9
    assert sorted(m.real for m in orbit.multipliers) == pytest.approx([-1, 1])
    assert orbit.type == "neutral"
    assert orbit.cluster_size == 3


@pytest.mark.parametrize("period", [0, 7])
def test_period_range(cubic_henon: HenonForm, period):
    with pytest.raises(ValueError):
        periodic_points(cubic_henon, period)


def test_resultant_cap(cubic_henon: HenonForm):
    with pytest.raises(ResourceCapExceeded) as e:
        periodic_points(cubic_henon, 2, degree_cap=5)
    assert e.value.cap == "resultant"


def test_points_of_polymaps_are_fixed_by_the_map(quadratic_henon: HenonForm):
    a = PolyMap.from_strings("x + 1", "2*y - x")
    g = compose_maps(compose_maps(a, quadratic_henon.to_map()), invert_map(a))
    for orbit in periodic_points(g, 1):
        x, y = orbit.points[0]
        gx, gy = g.eval_complex(x, y)
        assert gx == pytest.approx(x, abs=1e-7)
        assert gy == pytest.approx(y, abs=1e-7)


def test_spectrum_is_a_conjugacy_invariant(quadratic_henon: HenonForm):
    a = PolyMap.from_strings("x + 1", "2*y - x")
    g = compose_maps(compose_maps(a, quadratic_henon.to_map()), invert_map(a))
    first = multiplier_spectrum(quadratic_henon, 2)
    second = multiplier_spectrum(g, 2)
    assert len(first) == 3
    comparison = compare_spectra(first, second)
    assert comparison.matches
    assert comparison.sizes == (3, 3)


def test_spectrum_mismatch():
    comparison = compare_spectra([(2.0, 0.5)], [(2.0, 0.5), (-1.0, 1.0)])
    assert not comparison.matches
    assert comparison.to_json()["unmatched"] == [[[-1.0, 0.0], [1.0, 0.0]]]
    assert compare_spectra([(2.0, 0.5)], [(2.0, 0.5)]).matches
