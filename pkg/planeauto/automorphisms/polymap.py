"""Polynomial maps of the plane (x, y) ↦ (p(x, y), q(x, y))."""
from __future__ import annotations

import math
from typing import Any, Optional

import numpy as np

from planeauto.algebra.field import RATIONALS, FieldElement, FieldSpec
from planeauto.algebra.parser import parse_poly
from planeauto.algebra.plane_poly import PlanePoly, format_poly, poly_compose2
from planeauto.exceptions import InvalidInput, SpecMismatch


class PolyMap:
    __slots__ = ("spec", "p", "q")

    def __init__(self, p: PlanePoly, q: PlanePoly, spec: Optional[FieldSpec] = None):
        spec = spec or p.spec
        if not (p.spec.same_field(spec) and q.spec.same_field(spec)):
            raise SpecMismatch(f"map components over {p.spec} and {q.spec}")
        p, q = p.lift(spec), q.lift(spec)
        if max(p.degree, q.degree) < 1:
            raise InvalidInput("constant maps are not allowed")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __setattr__(self, key, value):
        raise AttributeError("PolyMap is immutable")

    @classmethod
    def identity(cls, spec: FieldSpec = RATIONALS) -> PolyMap:
        return cls(PlanePoly.x(spec), PlanePoly.y(spec), spec)

    @classmethod
    def from_strings(cls, x: str, y: str, spec: FieldSpec = RATIONALS) -> PolyMap:
        return cls(parse_poly(x, spec), parse_poly(y, spec), spec)

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> PolyMap:
        try:
            spec = FieldSpec.from_json(data.get("field", "Q"))
            return cls.from_strings(str(data["x"]), str(data["y"]), spec)
        except KeyError as e:
            raise InvalidInput(f"map JSON is missing the {e.args[0]!r} component")

    def to_json(self) -> dict[str, Any]:
        return {
            "field": self.spec.to_json(),
            "x": format_poly(self.p),
            "y": format_poly(self.q),
        }

    @property
    def degree(self) -> int:
        return int(max(self.p.degree, self.q.degree))

    @property
    def components(self) -> tuple[PlanePoly, PlanePoly]:
        return self.p, self.q

    def lift(self, spec: FieldSpec) -> PolyMap:
        return PolyMap(self.p.lift(spec), self.q.lift(spec), spec)

    def compose(self, other: PolyMap) -> PolyMap:
        """self ∘ other."""
        return compose_maps(self, other)

    def __matmul__(self, other: PolyMap) -> PolyMap:
        return compose_maps(self, other)

    def is_identity(self) -> bool:
        return self.p == PlanePoly.x(self.spec) and self.q == PlanePoly.y(self.spec)

    def jacobian_matrix(self) -> tuple[tuple[PlanePoly, PlanePoly], tuple[PlanePoly, PlanePoly]]:
        return (
            (self.p.derivative("x"), self.p.derivative("y")),
            (self.q.derivative("x"), self.q.derivative("y")),
        )

    def jacobian(self) -> PlanePoly:
        (px, py), (qx, qy) = self.jacobian_matrix()
        return px * qy - py * qx

    def constant_jacobian(self) -> Optional[FieldElement]:
        """The Jacobian determinant when it is a nonzero constant."""
        det = self.jacobian()
        if det and det.is_constant():
            return det.constant_value()
        return None

    def eval_complex(self, x: complex, y: complex) -> tuple[complex, complex]:
        return self.p.eval_complex(x, y), self.q.eval_complex(x, y)

    def eval_complex_array(self, x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return self.p.eval_complex_array(x, y), self.q.eval_complex_array(x, y)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, PolyMap):
            return NotImplemented
        return self.p == other.p and self.q == other.q

    def __hash__(self) -> int:
        return hash((self.p, self.q))

    def __str__(self) -> str:
        return f"({format_poly(self.p)}, {format_poly(self.q)})"

    def __repr__(self) -> str:
        return f"PolyMap{self}"


def compose_maps(f: PolyMap, g: PolyMap) -> PolyMap:
    """f ∘ g, exactly."""
    if not f.spec.same_field(g.spec):
        raise SpecMismatch(f"maps over {f.spec} and {g.spec}")
    return PolyMap(poly_compose2(f.p, g.p, g.q), poly_compose2(f.q, g.p, g.q), f.spec)


def jacobian_det(f: PolyMap) -> tuple[PlanePoly, bool]:
    """Jacobian determinant and whether it is a nonzero constant."""
    det = f.jacobian()
    return det, bool(det) and det.is_constant()


def iterate(f: PolyMap, n: int) -> PolyMap:
    """fⁿ for n ≥ 0."""
    if n < 0:
        raise ValueError("use invert_map for negative iterates")
    result = PolyMap.identity(f.spec)
    for _ in range(n):
        result = compose_maps(f, result)
    return result


def degree_sequence(f: PolyMap, n: int) -> list[int]:
    """deg(f), deg(f²), …, deg(fⁿ)."""
    degrees = []
    current = f
    for k in range(1, n + 1):
        if k > 1:
            current = compose_maps(f, current)
        degrees.append(current.degree)
    return degrees


def dynamical_degree_estimate(f: PolyMap, n: int = 4) -> float:
    """exp of the least-squares slope of log deg(fᵏ) against k, k ≤ n."""
    degrees = degree_sequence(f, n)
    if n < 2:
        return float(degrees[0])
    ks = np.arange(1, n + 1, dtype=float)
    logs = np.log(np.array(degrees, dtype=float))
    slope = np.polyfit(ks, logs, 1)[0]
    return float(math.exp(slope))
