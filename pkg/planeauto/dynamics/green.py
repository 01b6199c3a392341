"""Escape-rate Green functions G⁺ and G⁻ of Hénon words.

All evaluation goes through :func:`escape_rate`, a masked numpy kernel over
arrays of points; the scalar entry points call it with one-element arrays so
single points and raster cells agree bit for bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional, Sequence, Union

import numpy as np

from planeauto.automorphisms.henon import HenonForm, henon_normal_form
from planeauto.automorphisms.polymap import PolyMap
from planeauto.dynamics.filtration import (
    FiltrationBounds,
    NumericFactor,
    escape_steps,
    filtration_bounds,
)
from planeauto.exceptions import InvalidEscapeRadius, NonFiniteInput

Point = tuple[complex, complex]

# Norm above which orbits are tracked by log-magnitudes only.
LOG_SWITCH = math.log(1e150)
LOG_OVERFLOW = math.log(1e300)
# Escaped orbits keep iterating until C'·d⁻ⁿ drops below this.
REFINE_TARGET = 1e-12
DIRECTIONS = ("plus", "minus")


@dataclass
class GreenEstimate:
    value: float
    iterations_used: int
    error_bound: float
    escaped: bool

    def to_json(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "iterations_used": self.iterations_used,
            "error_bound": self.error_bound,
            "escaped": self.escaped,
        }


@dataclass
class EscapeField:
    """Kernel output; arrays share the shape of the input points."""

    values: np.ndarray
    iterations: np.ndarray
    error_bounds: np.ndarray
    escaped: np.ndarray

    def estimate(self, index: int = 0) -> GreenEstimate:
        flat = (a.ravel() for a in (self.values, self.iterations, self.error_bounds, self.escaped))
        values, iterations, errors, escaped = flat
        return GreenEstimate(
            value=float(values[index]),
            iterations_used=int(iterations[index]),
            error_bound=float(errors[index]),
            escaped=bool(escaped[index]),
        )


def _log_abs(z: np.ndarray) -> np.ndarray:
    with np.errstate(divide="ignore"):
        return np.log(np.abs(z))


def _log_norm(lx: np.ndarray, ly: np.ndarray) -> np.ndarray:
    """log of the Euclidean norm from log-magnitudes."""
    top = np.maximum(lx, ly)
    with np.errstate(invalid="ignore"):
        gap = np.abs(lx - ly)
        out = top + 0.5 * np.log1p(np.exp(-2.0 * gap))
    return np.where(np.isneginf(top), -np.inf, out)


def _advance(step: NumericFactor, x, y, lx, ly, log_mode, running) -> None:
    live = np.flatnonzero(running & ~log_mode)
    if live.size:
        ax, ay = np.abs(x[live]), np.abs(y[live])
        with np.errstate(divide="ignore", invalid="ignore"):
            predicted = np.maximum(
                step.log_a + np.log(ay), step.log_leading + step.degree * np.log(ax)
            )
        switch = (np.maximum(ax, ay) > math.exp(LOG_SWITCH)) | (predicted > LOG_OVERFLOW)
        moved = live[switch]
        lx[moved] = _log_abs(x[moved])
        ly[moved] = _log_abs(y[moved])
        log_mode[moved] = True
        keep = live[~switch]
        old_x = x[keep]
        x[keep] = step.a * y[keep] + np.polyval(step.horner, old_x)
        y[keep] = old_x
    logged = np.flatnonzero(running & log_mode)
    if logged.size:
        old_lx = lx[logged]
        lx[logged] = np.maximum(step.log_a + ly[logged], step.log_leading + step.degree * old_lx)
        ly[logged] = old_lx


def escape_rate(
    steps: Sequence[NumericFactor],
    x: Union[np.ndarray, complex],
    y: Union[np.ndarray, complex],
    max_iter: int,
    escape_radius: float,
    constant: float,
) -> EscapeField:
    """d⁻ⁿ·log‖zₙ‖ for every point, with certified error bounds.

    A point escapes at the first n with |xₙ| ≥ max(|yₙ|, escape_radius). It then
    keeps iterating until C'·d⁻ⁿ ≤ ``REFINE_TARGET`` or ``max_iter`` is reached.
    """
    degree = math.prod(step.degree for step in steps)
    log_degree = math.log(degree)
    shape = np.broadcast(np.asarray(x), np.asarray(y)).shape
    x = np.broadcast_to(np.asarray(x, dtype=complex), shape).ravel().copy()
    y = np.broadcast_to(np.asarray(y, dtype=complex), shape).ravel().copy()
    size = x.size
    lx = np.full(size, -np.inf)
    ly = np.full(size, -np.inf)
    log_mode = np.zeros(size, dtype=bool)
    escaped = np.zeros(size, dtype=bool)
    running = np.ones(size, dtype=bool)
    escape_step = np.full(size, max_iter, dtype=np.int64)
    steps_done = np.full(size, max_iter, dtype=np.int64)
    final_log_norm = np.full(size, -np.inf)

    refine_steps = max(0, math.ceil(math.log(constant / REFINE_TARGET) / log_degree))
    log_radius = math.log(escape_radius)
    for n in range(max_iter + 1):
        cur_lx = np.where(log_mode, lx, _log_abs(x))
        cur_ly = np.where(log_mode, ly, _log_abs(y))
        arrived = running & ~escaped & (cur_lx >= cur_ly) & (cur_lx >= log_radius)
        escaped |= arrived
        escape_step[arrived] = n
        refined = escaped & (n >= np.maximum(escape_step, refine_steps))
        done = running & (refined | (n == max_iter))
        steps_done[done] = n
        final_log_norm[done] = _log_norm(cur_lx[done], cur_ly[done])
        running &= ~done
        if not running.any():
            break
        for step in steps:
            _advance(step, x, y, lx, ly, log_mode, running)

    scale = np.exp(-steps_done * log_degree)
    values = np.where(escaped, final_log_norm * scale, 0.0)
    floor = math.log(math.sqrt(2.0) * escape_radius)
    errors = np.where(
        escaped,
        constant * scale,
        scale * (np.maximum(final_log_norm, floor) + constant),
    )
    return EscapeField(
        values=values.reshape(shape),
        iterations=steps_done.reshape(shape),
        error_bounds=errors.reshape(shape),
        escaped=escaped.reshape(shape),
    )


def pull_back_point(h: HenonForm, z: Point) -> Point:
    """φ(z) for the Hénon conjugator φ, so G±_f(z) = G±_H(φ(z))."""
    return h.conjugator.eval_complex(complex(z[0]), complex(z[1]))


def resolve_form(h: Union[HenonForm, PolyMap]) -> HenonForm:
    if isinstance(h, HenonForm):
        return h
    if isinstance(h, PolyMap):
        return henon_normal_form(h)
    raise TypeError(f"expected a HenonForm or PolyMap, got {type(h).__name__}")


def check_escape_radius(bounds: FiltrationBounds, escape_radius: Optional[float]) -> float:
    if escape_radius is None:
        return bounds.radius
    if not math.isfinite(escape_radius) or escape_radius < bounds.radius:
        raise InvalidEscapeRadius(
            f"escape radius {escape_radius} is below the filtration radius {bounds.radius:.6g}",
            radius=bounds.radius,
        )
    return float(escape_radius)


def green_field(
    h: HenonForm,
    x: np.ndarray,
    y: np.ndarray,
    direction: str = "plus",
    max_iter: int = 200,
    escape_radius: Optional[float] = None,
    bounds: Optional[FiltrationBounds] = None,
) -> EscapeField:
    """Vectorized G⁺ or G⁻ of a Hénon form at the points (x, y)."""
    if direction not in DIRECTIONS:
        raise ValueError(f"unknown direction {direction!r}")
    bounds = bounds or filtration_bounds(h)
    radius = check_escape_radius(bounds, escape_radius)
    steps = escape_steps(h, direction)
    if direction == "minus":
        x, y = y, x
    return escape_rate(steps, x, y, max_iter, radius, bounds.constant_for(direction))


def _point_estimate(
    h: Union[HenonForm, PolyMap],
    z: Point,
    direction: str,
    max_iter: int,
    escape_radius: Optional[float],
) -> GreenEstimate:
    if not all(math.isfinite(c.real) and math.isfinite(c.imag) for c in map(complex, z)):
        raise NonFiniteInput(f"non-finite point {z}")
    form = resolve_form(h)
    if isinstance(h, PolyMap):
        z = pull_back_point(form, z)
    field = green_field(
        form, np.array([z[0]]), np.array([z[1]]), direction, max_iter, escape_radius
    )
    return field.estimate()


def green_plus(
    h: Union[HenonForm, PolyMap],
    z: Point,
    max_iter: int = 200,
    escape_radius: Optional[float] = None,
) -> GreenEstimate:
    return _point_estimate(h, z, "plus", max_iter, escape_radius)


def green_minus(
    h: Union[HenonForm, PolyMap],
    z: Point,
    max_iter: int = 200,
    escape_radius: Optional[float] = None,
) -> GreenEstimate:
    return _point_estimate(h, z, "minus", max_iter, escape_radius)


def green_max(
    h: Union[HenonForm, PolyMap],
    z: Point,
    max_iter: int = 200,
    escape_radius: Optional[float] = None,
) -> GreenEstimate:
    """G = max(G⁺, G⁻); zero exactly on K = K⁺ ∩ K⁻."""
    plus = green_plus(h, z, max_iter, escape_radius)
    minus = green_minus(h, z, max_iter, escape_radius)
    return GreenEstimate(
        value=max(plus.value, minus.value),
        iterations_used=max(plus.iterations_used, minus.iterations_used),
        error_bound=max(plus.error_bound, minus.error_bound),
        escaped=plus.escaped or minus.escaped,
    )


def in_k_plus(h, z: Point, max_iter: int = 200, escape_radius: Optional[float] = None) -> bool:
    """No forward escape within ``max_iter`` steps."""
    return not green_plus(h, z, max_iter, escape_radius).escaped


def in_k_minus(h, z: Point, max_iter: int = 200, escape_radius: Optional[float] = None) -> bool:
    return not green_minus(h, z, max_iter, escape_radius).escaped


def in_k(h, z: Point, max_iter: int = 200, escape_radius: Optional[float] = None) -> bool:
    return in_k_plus(h, z, max_iter, escape_radius) and in_k_minus(h, z, max_iter, escape_radius)
