"""Complex roots of univariate polynomials given highest degree first."""
from __future__ import annotations

import numpy as np

from planeauto.exceptions import RootIsolationError
from planeauto.logs import logger

ABERTH_MAX_STEPS = 500
ABERTH_TOL = 1e-14


def _strip(coeffs: np.ndarray) -> np.ndarray:
    nonzero = np.flatnonzero(coeffs)
    if not nonzero.size:
        raise RootIsolationError("the zero polynomial has no isolated roots")
    return coeffs[nonzero[0] :]


def aberth_roots(coeffs: np.ndarray, max_steps: int = ABERTH_MAX_STEPS) -> np.ndarray:
    """Simultaneous Aberth–Ehrlich iteration started on a Cauchy-bound circle."""
    p = _strip(np.asarray(coeffs, dtype=complex))
    p = p / p[0]
    n = len(p) - 1
    if n == 0:
        return np.zeros(0, dtype=complex)
    dp = np.polyder(p)
    radius = 1.0 + float(np.max(np.abs(p[1:])))
    angles = 2.0 * np.pi * (np.arange(n) + 0.25) / n
    z = 0.5 * radius * np.exp(1j * angles)
    for step in range(max_steps):
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.polyval(p, z) / np.polyval(dp, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = np.sum(1.0 / diff, axis=1)
            correction = ratio / (1.0 - ratio * repulsion)
        correction = np.where(np.isfinite(correction), correction, 0.0)
        z = z - correction
        if np.all(np.abs(correction) <= ABERTH_TOL * np.maximum(1.0, np.abs(z))):
            logger.debug(f"Aberth converged in {step + 1} steps for degree {n}", "ROOTS")
            return z
    logger.warn(f"Aberth iteration did not converge for degree {n}", "ROOTS")
    return z


def polynomial_roots(coeffs, aberth_threshold: int = 200) -> np.ndarray:
    """Companion-matrix eigenvalues up to ``aberth_threshold``, Aberth beyond."""
    p = _strip(np.asarray(coeffs, dtype=complex))
    degree = len(p) - 1
    if degree <= 0:
        return np.zeros(0, dtype=complex)
    if degree <= aberth_threshold:
        return np.roots(p)
    return aberth_roots(p)
