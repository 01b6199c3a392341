"""Periodic points and multiplier spectra of Hénon words.

hⁿ(x, y) = (x, y) is eliminated exactly: the resultant in y of the two
coordinate equations is a univariate polynomial in x whose complex roots are
back-substituted and refined by Newton's method in two variables.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence, Union

import numpy as np
import sympy

from planeauto.algebra.field import FieldElement, FieldSpec
from planeauto.algebra.plane_poly import PlanePoly
from planeauto.automorphisms.henon import HenonForm
from planeauto.automorphisms.jung import invert_map
from planeauto.automorphisms.polymap import PolyMap, iterate
from planeauto.dynamics.filtration import NumericFactor, escape_steps
from planeauto.dynamics.green import resolve_form
from planeauto.dynamics.roots import polynomial_roots
from planeauto.exceptions import IllConditionedCluster, ResourceCapExceeded
from planeauto.logs import logger

MAX_PERIOD = 6
NEUTRAL_TOL = 1e-9
ACCEPT_RESIDUAL = 1e-8
KEY_DIGITS = 8

_X, _Y, _T = sympy.symbols("x y t")


@dataclass
class PeriodicOrbit:
    period: int
    points: list[tuple[complex, complex]]
    multipliers: tuple[complex, complex]
    type: str
    residual: float = 0.0
    cluster_size: int = 1

    def to_json(self) -> dict[str, Any]:
        pair = lambda w: [w.real, w.imag]  # noqa: E731
        return {
            "period": self.period,
            "points": [[pair(x), pair(y)] for x, y in self.points],
            "multipliers": [pair(m) for m in self.multipliers],
            "type": self.type,
            "residual": self.residual,
            "cluster_size": self.cluster_size,
        }


def classify_multipliers(m1: complex, m2: complex, neutral_tol: float = NEUTRAL_TOL) -> str:
    def side(m: complex) -> int:
        r = abs(m)
        if abs(r - 1.0) <= neutral_tol:
            return 0
        return -1 if r < 1.0 else 1

    sides = sorted((side(m1), side(m2)))
    if sides == [-1, 1]:
        return "saddle"
    if sides == [-1, -1]:
        return "attracting"
    if sides == [1, 1]:
        return "repelling"
    if sides == [0, 0]:
        return "neutral"
    return "mixed"


def multiplier_key(m: complex) -> tuple[float, float]:
    return (round(abs(m), KEY_DIGITS), round(cmath.phase(m), KEY_DIGITS))


def canonical_pair(m1: complex, m2: complex) -> tuple[complex, complex]:
    return tuple(sorted((complex(m1), complex(m2)), key=multiplier_key))  # type: ignore[return-value]


# Numeric orbit evaluation


def _apply_word(
    steps: Sequence[NumericFactor], x: np.ndarray, y: np.ndarray, times: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """hᵗⁱᵐᵉˢ at arrays of points together with the Jacobian product."""
    jac = np.zeros(x.shape + (2, 2), dtype=complex)
    jac[..., 0, 0] = 1.0
    jac[..., 1, 1] = 1.0
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(times):
            for step in steps:
                dp = np.polyval(np.polyder(step.horner), x)
                local = np.zeros_like(jac)
                local[..., 0, 0] = dp
                local[..., 0, 1] = step.a
                local[..., 1, 0] = 1.0
                jac = local @ jac
                x, y = step.a * y + np.polyval(step.horner, x), x
    return x, y, jac


def _newton(
    steps: Sequence[NumericFactor], x: np.ndarray, y: np.ndarray, period: int, newton_steps: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Refine solutions of hⁿ(z) = z; returns points and max-norm residuals."""
    for _ in range(newton_steps):
        hx, hy, jac = _apply_word(steps, x, y, period)
        fx, fy = hx - x, hy - y
        m00, m01 = jac[..., 0, 0] - 1.0, jac[..., 0, 1]
        m10, m11 = jac[..., 1, 0], jac[..., 1, 1] - 1.0
        with np.errstate(over="ignore", invalid="ignore", divide="ignore"):
            det = m00 * m11 - m01 * m10
            dx = (-m11 * fx + m01 * fy) / det
            dy = (m10 * fx - m00 * fy) / det
        usable = np.isfinite(dx) & np.isfinite(dy)
        dx = np.where(usable, dx, 0.0)
        dy = np.where(usable, dy, 0.0)
        x, y = x + dx, y + dy
        scale = np.maximum(1.0, np.maximum(np.abs(x), np.abs(y)))
        if np.all(np.maximum(np.abs(dx), np.abs(dy)) <= 1e-15 * scale):
            break
    hx, hy, _ = _apply_word(steps, x, y, period)
    with np.errstate(invalid="ignore"):
        residual = np.maximum(np.abs(hx - x), np.abs(hy - y))
    return x, y, residual


# Exact elimination


def _to_sympy(p: PlanePoly) -> sympy.Poly:
    terms = {}
    for (i, j), c in p.terms.items():
        for k, q in enumerate(c.coeffs):
            if q:
                terms[(j, i, k)] = sympy.Rational(q.numerator, q.denominator)
    return sympy.Poly.from_dict(terms or {(0, 0, 0): 0}, _Y, _X, _T, domain="QQ")


def _resultant_coefficients(hn: PolyMap) -> np.ndarray:
    """Complex coefficients, highest first, of Res_y(P − x, Q − y) for hⁿ = (P, Q)."""
    spec: FieldSpec = hn.spec
    x, y = PlanePoly.x(spec), PlanePoly.y(spec)
    p_eq, q_eq = _to_sympy(hn.p - x), _to_sympy(hn.q - y)
    res = sympy.resultant(p_eq.as_expr(), q_eq.as_expr(), _Y)
    res_poly = sympy.Poly(res, _X, _T, domain="QQ")
    if res_poly.is_zero:
        raise IllConditionedCluster("the fixed-point equations share a common curve")
    by_power: dict[int, dict[int, Fraction]] = {}
    for (i, k), c in res_poly.terms():
        by_power.setdefault(i, {})[k] = Fraction(int(c.p), int(c.q))
    degree = max(by_power)
    exact = []
    for i in range(degree + 1):
        parts = by_power.get(i, {})
        coeffs = [parts.get(k, Fraction(0)) for k in range(max(parts, default=0) + 1)]
        exact.append(FieldElement(spec, coeffs))
    scale = max(abs(c) for e in exact for c in e.coeffs)
    embedded = [FieldElement(spec, [c / scale for c in e.coeffs]).embed() for e in exact]
    return np.array(embedded[::-1], dtype=complex)


def _y_candidates(hn: PolyMap, x0: complex, aberth_threshold: int) -> np.ndarray:
    """Roots in y of Q(x0, y) − y."""
    ex, ey, coeffs = hn.q.embedded_terms()
    degree = int(ey.max()) if ey.size else 0
    univariate = np.zeros(max(degree, 1) + 1, dtype=complex)
    for a, b, c in zip(ex, ey, coeffs):
        univariate[int(b)] += c * x0 ** int(a)
    univariate[1] -= 1.0
    return polynomial_roots(univariate[::-1], aberth_threshold)


def _dedupe(points: np.ndarray, tolerance: float) -> list[int]:
    reps: list[int] = []
    for i in np.lexsort((points[:, 1].imag, points[:, 1].real, points[:, 0].imag, points[:, 0].real)):
        scale = max(1.0, float(np.max(np.abs(points[i]))))
        if not any(np.max(np.abs(points[i] - points[r])) <= tolerance * scale for r in reps):
            reps.append(int(i))
    return reps


def fixed_points(
    h: HenonForm,
    period: int,
    grouping_tolerance: float = 1e-7,
    newton_steps: int = 50,
    aberth_threshold: int = 200,
    degree_cap: int = 1000,
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Distinct solutions of hⁿ(z) = z: (points (N, 2), residuals, cluster sizes)."""
    if h.degree**period > degree_cap:
        raise ResourceCapExceeded(
            f"deg(h^{period}) = {h.degree ** period} exceeds the resultant cap {degree_cap}",
            cap="resultant",
            limit=degree_cap,
        )
    hn = iterate(h.to_map(), period)
    x_roots = polynomial_roots(_resultant_coefficients(hn), aberth_threshold)
    xs, ys = [], []
    for x0 in x_roots:
        for y0 in _y_candidates(hn, complex(x0), aberth_threshold):
            xs.append(complex(x0))
            ys.append(complex(y0))
    if not xs:
        return np.zeros((0, 2), dtype=complex), np.zeros(0), np.zeros(0, dtype=int)
    steps = escape_steps(h, "plus")
    x, y, residual = _newton(steps, np.array(xs), np.array(ys), period, newton_steps)
    scale = np.maximum(1.0, np.maximum(np.abs(x), np.abs(y)))
    good = np.isfinite(residual) & (residual <= ACCEPT_RESIDUAL * scale)
    if not good.any():
        raise IllConditionedCluster(
            f"no period-{period} candidate survived refinement",
            residuals=[float(r) for r in residual[np.isfinite(residual)][:16]],
        )
    points = np.stack([x[good], y[good]], axis=1)
    residual = residual[good]
    reps = _dedupe(points, grouping_tolerance)
    points, residual = points[reps], residual[reps]

    loose = math.sqrt(grouping_tolerance)
    clusters = np.ones(len(reps), dtype=int)
    for i, (px, _) in enumerate(points):
        scale_x = max(1.0, abs(px))
        near_roots = int(np.sum(np.abs(x_roots - px) <= loose * scale_x))
        sharing = int(np.sum(np.abs(points[:, 0] - px) <= loose * scale_x))
        clusters[i] = max(1, round(near_roots / max(sharing, 1)))
    flagged = int(np.sum(clusters > 1))
    if flagged:
        logger.warn(f"{flagged} period-{period} points lie in root clusters", "PERIODIC")
    logger.debug(f"{len(x_roots)} resultant roots, {len(reps)} distinct points of period {period}", "PERIODIC")
    return points, residual, clusters


def _group_orbits(
    h: HenonForm,
    points: np.ndarray,
    residual: np.ndarray,
    clusters: np.ndarray,
    period: int,
    match_tolerance: float,
) -> list[PeriodicOrbit]:
    steps = escape_steps(h, "plus")
    assigned = np.zeros(len(points), dtype=bool)
    orbits = []
    for start in range(len(points)):
        if assigned[start]:
            continue
        members = [start]
        current = points[start]
        for k in range(1, period + 1):
            nx, ny, _ = _apply_word(steps, np.array([current[0]]), np.array([current[1]]), 1)
            image = np.array([nx[0], ny[0]])
            scale = max(1.0, float(np.max(np.abs(image))))
            gaps = np.max(np.abs(points - image), axis=1)
            nearest = int(np.argmin(gaps))
            if gaps[nearest] > match_tolerance * scale:
                members.append(-1)
                current = image
                continue
            if nearest == start:
                break
            members.append(nearest)
            current = points[nearest]
        members = [m for m in members if m >= 0][: period]
        for m in members:
            assigned[m] = True
        first = points[members[0]]
        _, _, jac = _apply_word(steps, np.array([first[0]]), np.array([first[1]]), len(members))
        m1, m2 = canonical_pair(*np.linalg.eigvals(jac[0]))
        orbits.append(
            PeriodicOrbit(
                period=len(members),
                points=[(complex(points[m][0]), complex(points[m][1])) for m in members],
                multipliers=(m1, m2),
                type=classify_multipliers(m1, m2),
                residual=float(np.max(residual[members])),
                cluster_size=int(np.max(clusters[members])),
            )
        )
    return orbits


def periodic_points(
    h: Union[HenonForm, PolyMap],
    period: int,
    grouping_tolerance: float = 1e-7,
    newton_steps: int = 50,
    aberth_threshold: int = 200,
    degree_cap: int = 1000,
) -> list[PeriodicOrbit]:
    """Orbits whose minimal period divides ``period``; points of a PolyMap are pulled back."""
    if not 1 <= period <= MAX_PERIOD:
        raise ValueError(f"period must be between 1 and {MAX_PERIOD}, got {period}")
    form = resolve_form(h)
    points, residual, clusters = fixed_points(
        form, period, grouping_tolerance, newton_steps, aberth_threshold, degree_cap
    )
    orbits = _group_orbits(
        form, points, residual, clusters, period, max(1e-6, 100 * grouping_tolerance)
    )
    if isinstance(h, PolyMap):
        back = form.conjugator_inverse or invert_map(form.conjugator)
        for orbit in orbits:
            orbit.points = [back.eval_complex(x, y) for x, y in orbit.points]
    orbits.sort(key=lambda o: (o.period, multiplier_key(o.multipliers[0]), multiplier_key(o.multipliers[1])))
    return orbits


def multiplier_spectrum(
    h: Union[HenonForm, PolyMap],
    max_period: int,
    **options: Any,
) -> list[tuple[complex, complex]]:
    """Multiplier pairs of all orbits of minimal period ≤ ``max_period``, sorted canonically."""
    form = resolve_form(h)
    spectrum = []
    for n in range(1, max_period + 1):
        for orbit in periodic_points(form, n, **options):
            if orbit.period == n:
                spectrum.append(orbit.multipliers)
    spectrum.sort(key=lambda pair: (multiplier_key(pair[0]), multiplier_key(pair[1])))
    return spectrum


@dataclass
class SpectrumComparison:
    matches: bool
    sizes: tuple[int, int]
    max_gap: float = 0.0
    unmatched: list[tuple[complex, complex]] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "matches": self.matches,
            "sizes": list(self.sizes),
            "max_gap": self.max_gap,
            "unmatched": [[[m.real, m.imag] for m in pair] for pair in self.unmatched],
        }


def compare_spectra(
    first: Sequence[tuple[complex, complex]],
    second: Sequence[tuple[complex, complex]],
    tol: float = 1e-6,
) -> SpectrumComparison:
    """Greedy matching of multiplier pairs up to ``tol`` relative to max(1, |λ|)."""
    sizes = (len(first), len(second))
    unused = list(second)
    unmatched = []
    max_gap = 0.0
    for pair in first:
        best, best_gap = None, math.inf
        for idx, other in enumerate(unused):
            gap = max(
                abs(pair[i] - other[i]) / max(1.0, abs(pair[i])) for i in range(2)
            )
            if gap < best_gap:
                best, best_gap = idx, gap
        if best is not None and best_gap <= tol:
            max_gap = max(max_gap, best_gap)
            unused.pop(best)
        else:
            unmatched.append(pair)
    unmatched.extend(unused)
    return SpectrumComparison(not unmatched and sizes[0] == sizes[1], sizes, max_gap, unmatched)
