import numpy as np
import pytest

from planeauto.dynamics.roots import aberth_roots, polynomial_roots
from planeauto.exceptions import RootIsolationError


def sorted_roots(z):
    return np.array(sorted(z, key=lambda w: (round(w.real, 8), round(w.imag, 8))))


def test_roots_of_unity_agree():
    coeffs = np.zeros(9, dtype=complex)
    coeffs[0], coeffs[-1] = 1, -1
    companion = sorted_roots(polynomial_roots(coeffs))
    aberth = sorted_roots(aberth_roots(coeffs))
    assert np.allclose(companion, aberth, atol=1e-10)
    assert np.allclose(np.abs(aberth), 1.0)


def test_threshold_selects_aberth():
    coeffs = np.array([1.0, 0.0, -2.0])
    roots = sorted_roots(polynomial_roots(coeffs, aberth_threshold=1))
    assert roots.real == pytest.approx([-np.sqrt(2), np.sqrt(2)])


def test_leading_zeros_are_stripped():
    assert sorted_roots(polynomial_roots([0, 0, 1, -3])).tolist() == [3]
    assert polynomial_roots([0, 5]).size == 0


def test_zero_polynomial():
    with pytest.raises(RootIsolationError):
        polynomial_roots([0, 0])
