"""Filtration radii and log-growth constants for Hénon words.

Every factor (x, y) ↦ (a·y + p(x), x) maps V⁺ = {|x| ≥ max(|y|, R)} into
itself once R is past the factor radius, and there

    |c_d|·|x|^d / 2 ≤ |a·y + p(x)| ≤ (|c_d| + Σ|c_k| + |a|)·|x|^d.

The backward direction is handled by swapping coordinates: in (y, x) the
inverse factor is again of Hénon type with a' = 1/a and p' = −p/a.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from planeauto.automorphisms.henon import HenonFactor, HenonForm

HALF_LOG_TWO = 0.5 * math.log(2.0)


@dataclass(frozen=True)
class NumericFactor:
    """A Hénon factor with complex coefficients of p, lowest degree first."""

    a: complex
    coeffs: np.ndarray

    @classmethod
    def from_factor(cls, factor: HenonFactor) -> NumericFactor:
        coeffs = np.array([c.embed() for c in factor.coefficients()], dtype=complex)
        return cls(complex(factor.a.embed()), coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> complex:
        return complex(self.coeffs[-1])

    @property
    def lower_sum(self) -> float:
        return float(np.abs(self.coeffs[:-1]).sum())

    @property
    def log_a(self) -> float:
        return math.log(abs(self.a))

    @property
    def log_leading(self) -> float:
        return math.log(abs(self.leading))

    @property
    def horner(self) -> np.ndarray:
        """Coefficients highest degree first, for ``np.polyval``."""
        return self.coeffs[::-1]

    def radius(self) -> float:
        lead = abs(self.leading)
        return max(
            1.0,
            2.0 * (self.lower_sum + abs(self.a)) / lead,
            (4.0 / lead) ** (1.0 / (self.degree - 1)),
        )

    def log_bound(self) -> float:
        """Bound on |log|x'| − d·log|x|| inside V⁺."""
        lead = abs(self.leading)
        upper = lead + self.lower_sum + abs(self.a)
        return max(abs(math.log(lead / 2.0)), abs(math.log(upper)))

    def swapped_inverse(self) -> NumericFactor:
        return NumericFactor(1.0 / self.a, -self.coeffs / self.a)


def escape_steps(h: HenonForm, direction: str = "plus") -> list[NumericFactor]:
    """Factors in application order; ``minus`` gives h⁻¹ in swapped coordinates."""
    numeric = [NumericFactor.from_factor(f) for f in h.factors]
    if direction == "plus":
        return list(reversed(numeric))
    if direction == "minus":
        return [f.swapped_inverse() for f in numeric]
    raise ValueError(f"unknown direction {direction!r}")


def _word_log_bound(steps: list[NumericFactor]) -> float:
    bound = 0.0
    for step in steps:
        bound = step.degree * bound + step.log_bound()
    return bound


@dataclass(frozen=True)
class FiltrationBounds:
    degree: int
    radius_plus: float
    radius_minus: float
    log_bound_plus: float
    log_bound_minus: float

    @property
    def radius(self) -> float:
        """R₀: outside the closed bidisk of this radius every point lies in V⁺ or V⁻."""
        return max(self.radius_plus, self.radius_minus)

    def constant_for(self, direction: str) -> float:
        bound = self.log_bound_plus if direction == "plus" else self.log_bound_minus
        return bound / (self.degree - 1) + HALF_LOG_TWO

    @property
    def constant_plus(self) -> float:
        return self.constant_for("plus")

    @property
    def constant_minus(self) -> float:
        return self.constant_for("minus")

    @property
    def constant(self) -> float:
        """C' with |G(z) − log‖z‖| ≤ C' outside the bidisk of radius R₀."""
        return max(self.constant_plus, self.constant_minus)

    def to_json(self) -> dict[str, Any]:
        return {
            "degree": self.degree,
            "radius": self.radius,
            "radius_plus": self.radius_plus,
            "radius_minus": self.radius_minus,
            "log_bound_plus": self.log_bound_plus,
            "log_bound_minus": self.log_bound_minus,
            "constant": self.constant,
        }


def filtration_bounds(h: HenonForm) -> FiltrationBounds:
    plus = escape_steps(h, "plus")
    minus = escape_steps(h, "minus")
    return FiltrationBounds(
        degree=h.degree,
        radius_plus=max(step.radius() for step in plus),
        radius_minus=max(step.radius() for step in minus),
        log_bound_plus=_word_log_bound(plus),
        log_bound_minus=_word_log_bound(minus),
    )
