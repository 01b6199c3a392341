"""Sparse bivariate polynomials over a ``FieldSpec``."""
from __future__ import annotations

import math
from typing import Any, Iterable, Iterator, Mapping, Optional, Sequence, Union

import numpy as np

from planeauto.algebra.field import (
    FieldElement,
    FieldSpec,
    Scalar,
    lift,
)
from planeauto.algebra.limits import limits
from planeauto.exceptions import SpecMismatch

Exponent = tuple[int, int]

# Degree of the zero polynomial.
ZERO_DEGREE = -math.inf

# Evaluation result when double precision overflows.
OVERFLOW = complex(math.inf, 0.0)

VARIABLES = ("x", "y")


def graded_lex_key(exp: Exponent) -> tuple[int, int]:
    """Larger key is the larger monomial: total degree, then power of x."""
    return (exp[0] + exp[1], exp[0])


class PlanePoly:
    """An immutable map (i, j) ↦ nonzero coefficient of xⁱyʲ."""

    __slots__ = ("spec", "terms", "_embedded", "_hash")

    def __init__(self, spec: FieldSpec, terms: Mapping[Exponent, Any] = (), check: bool = True):
        clean: dict[Exponent, FieldElement] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (i, j), c in items:
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent ({i}, {j})")
            coeff = lift(c, spec) if not isinstance(c, FieldElement) or c.spec != spec else c
            if coeff:
                clean[(int(i), int(j))] = coeff
        if check and clean:
            limits.check_degree(max(i + j for i, j in clean))
            limits.check_terms(len(clean))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda t: graded_lex_key(t[0]), reverse=True)))
        object.__setattr__(self, "_embedded", None)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, key, value):
        raise AttributeError("PlanePoly is immutable")

    # Constructors

    @classmethod
    def zero(cls, spec: FieldSpec) -> PlanePoly:
        return cls(spec, {})

    @classmethod
    def constant(cls, spec: FieldSpec, value: Scalar) -> PlanePoly:
        return cls(spec, {(0, 0): value})

    @classmethod
    def x(cls, spec: FieldSpec) -> PlanePoly:
        return cls(spec, {(1, 0): 1})

    @classmethod
    def y(cls, spec: FieldSpec) -> PlanePoly:
        return cls(spec, {(0, 1): 1})

    @classmethod
    def monomial(cls, spec: FieldSpec, i: int, j: int, coeff: Scalar = 1) -> PlanePoly:
        return cls(spec, {(i, j): coeff})

    @classmethod
    def from_univariate(cls, spec: FieldSpec, coeffs: Sequence[Scalar], var: str = "x") -> PlanePoly:
        """Build Σ cₖ·varᵏ from coefficients listed lowest degree first."""
        if var == "x":
            return cls(spec, {(k, 0): c for k, c in enumerate(coeffs)})
        return cls(spec, {(0, k): c for k, c in enumerate(coeffs)})

    # Structure

    @property
    def degree(self) -> Union[int, float]:
        if not self.terms:
            return ZERO_DEGREE
        return max(i + j for i, j in self.terms)

    total_degree = degree

    def degree_in(self, var: str) -> Union[int, float]:
        idx = VARIABLES.index(var)
        if not self.terms:
            return ZERO_DEGREE
        return max(exp[idx] for exp in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Exponent, FieldElement]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, i: int, j: int) -> FieldElement:
        return self.terms.get((i, j), self.spec.zero())

    def is_constant(self) -> bool:
        return all(exp == (0, 0) for exp in self.terms)

    def constant_value(self) -> FieldElement:
        return self.coefficient(0, 0)

    def variables(self) -> set[str]:
        used = set()
        for i, j in self.terms:
            if i:
                used.add("x")
            if j:
                used.add("y")
        return used

    def leading_form(self) -> PlanePoly:
        """The homogeneous part of top degree."""
        d = self.degree
        return PlanePoly(self.spec, {e: c for e, c in self.terms.items() if e[0] + e[1] == d}, check=False)

    def univariate_coeffs(self, var: str) -> list[FieldElement]:
        """Coefficients lowest degree first; the polynomial must involve only ``var``."""
        if self.variables() - {var}:
            raise ValueError(f"{self} is not a polynomial in {var} alone")
        if not self.terms:
            return []
        idx = VARIABLES.index(var)
        out = [self.spec.zero()] * (int(self.degree_in(var)) + 1)
        for exp, c in self.terms.items():
            out[exp[idx]] = c
        return out

    def lift(self, spec: FieldSpec) -> PlanePoly:
        if spec == self.spec:
            return self
        return PlanePoly(spec, {e: lift(c, spec) for e, c in self.terms.items()}, check=False)

    def _check(self, other: PlanePoly) -> None:
        if not self.spec.same_field(other.spec):
            raise SpecMismatch(f"polynomials over {self.spec} and {other.spec}")

    def _as_poly(self, other: Any) -> Optional[PlanePoly]:
        if isinstance(other, PlanePoly):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return PlanePoly.constant(self.spec, other)
        return None

    # Arithmetic

    def __add__(self, other: Any) -> PlanePoly:
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        res = dict(self.terms)
        for e, c in other.terms.items():
            res[e] = res[e] + c if e in res else c
        return PlanePoly(self.spec, res, check=False)

    __radd__ = __add__

    def __neg__(self) -> PlanePoly:
        return PlanePoly(self.spec, {e: -c for e, c in self.terms.items()}, check=False)

    def __sub__(self, other: Any) -> PlanePoly:
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Any) -> PlanePoly:
        return (-self) + other

    def scale(self, c: Scalar) -> PlanePoly:
        c = lift(c, self.spec) if not isinstance(c, FieldElement) else c
        if not c:
            return PlanePoly.zero(self.spec)
        return PlanePoly(self.spec, {e: v * c for e, v in self.terms.items()}, check=False)

    def __mul__(self, other: Any) -> PlanePoly:
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return self.scale(other)
        if not isinstance(other, PlanePoly):
            return NotImplemented
        self._check(other)
        if self.terms and other.terms:
            limits.check_degree(self.degree + other.degree, "product")
        res: dict[Exponent, FieldElement] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                prod = c1 * c2
                res[e] = res[e] + prod if e in res else prod
        return PlanePoly(self.spec, res)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> PlanePoly:
        if isinstance(other, PlanePoly):
            if not other.is_constant() or not other:
                raise ValueError("only division by nonzero constants is supported")
            other = other.constant_value()
        return self.scale(1 / lift(other, self.spec))

    def __pow__(self, n: int) -> PlanePoly:
        if n < 0:
            raise ValueError("negative powers of polynomials are not polynomials")
        if self.terms:
            limits.check_degree(self.degree * n, "power")
        result = PlanePoly.constant(self.spec, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def derivative(self, var: str) -> PlanePoly:
        idx = VARIABLES.index(var)
        res = {}
        for exp, c in self.terms.items():
            k = exp[idx]
            if k:
                new = (exp[0] - 1, exp[1]) if idx == 0 else (exp[0], exp[1] - 1)
                res[new] = c * k
        return PlanePoly(self.spec, res, check=False)

    def compose(self, u: PlanePoly, v: PlanePoly) -> PlanePoly:
        return poly_compose2(self, u, v)

    # Equality

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, PlanePoly):
            return self.spec.same_field(other.spec) and self.terms == other.terms
        if isinstance(other, (int, FieldElement)) or hasattr(other, "denominator"):
            return self == PlanePoly.constant(self.spec, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash(tuple(self.terms.items())))
        return self._hash

    # Numerics

    def embedded_terms(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(x exponents, y exponents, complex coefficients), cached."""
        if self._embedded is None:
            exps = list(self.terms)
            ex = np.array([e[0] for e in exps], dtype=np.int64)
            ey = np.array([e[1] for e in exps], dtype=np.int64)
            coeffs = np.array([c.embed() for c in self.terms.values()], dtype=complex)
            object.__setattr__(self, "_embedded", (ex, ey, coeffs))
        return self._embedded

    def eval_complex(self, x: complex, y: complex) -> complex:
        return poly_eval_complex(self, (x, y))

    def eval_complex_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Vectorized evaluation; overflowing entries come back infinite."""
        ex, ey, coeffs = self.embedded_terms()
        out = np.zeros(np.broadcast(x, y).shape, dtype=complex)
        with np.errstate(over="ignore", invalid="ignore"):
            for a, b, c in zip(ex, ey, coeffs):
                term = c
                if a:
                    term = term * x ** int(a)
                if b:
                    term = term * y ** int(b)
                out = out + term
        return out

    # Printing

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"PlanePoly({format_poly(self)})"


def _format_coefficient(c: FieldElement) -> tuple[str, str]:
    """Sign and magnitude text of a coefficient."""
    if c.is_rational():
        value = c.rational_value()
        return ("-" if value < 0 else "+"), str(abs(value))
    text = str(c)
    if " " in text:
        return "+", f"({text})"
    if text.startswith("-"):
        return "-", text[1:]
    return "+", text


def format_poly(p: PlanePoly) -> str:
    """Canonical text: graded-lex descending terms with explicit ``*``."""
    if not p.terms:
        return "0"
    parts: list[str] = []
    for (i, j), c in p.terms.items():
        sign, mag = _format_coefficient(c)
        factors = []
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append("y" if j == 1 else f"y^{j}")
        mono = "*".join(factors)
        if not mono:
            body = mag
        elif mag == "1":
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def poly_arith(op: str, a: PlanePoly, b: PlanePoly) -> PlanePoly:
    a._check(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def poly_compose2(p: PlanePoly, u: PlanePoly, v: PlanePoly) -> PlanePoly:
    """p(u, v), by Horner's rule in x over coefficients that are polynomials in y."""
    p._check(u)
    p._check(v)
    spec = p.spec
    if not p.terms:
        return p
    inner = max(u.degree if u else 0, v.degree if v else 0, 0)
    limits.check_degree(p.degree * inner, "composition")
    by_x: dict[int, dict[int, FieldElement]] = {}
    for (i, j), c in p.terms.items():
        by_x.setdefault(i, {})[j] = c
    max_j = max(j for _, j in p.terms)
    v_powers = [PlanePoly.constant(spec, 1)]
    for _ in range(max_j):
        v_powers.append(v_powers[-1] * v)

    def column(i: int) -> PlanePoly:
        total = PlanePoly.zero(spec)
        for j, c in by_x.get(i, {}).items():
            total = total + v_powers[j].scale(c)
        return total

    result = PlanePoly.zero(spec)
    for i in range(max(by_x), -1, -1):
        result = result * u + column(i)
    return result


def poly_eval_complex(p: PlanePoly, z: tuple[complex, complex]) -> complex:
    """Evaluate at a complex pair; overflow yields ``OVERFLOW``."""
    x, y = complex(z[0]), complex(z[1])
    ex, ey, coeffs = p.embedded_terms()
    total = 0j
    with np.errstate(over="ignore", invalid="ignore"):
        try:
            for a, b, c in zip(ex, ey, coeffs):
                total += complex(c) * x ** int(a) * y ** int(b)
        except OverflowError:
            return OVERFLOW
    if not (math.isfinite(total.real) and math.isfinite(total.imag)):
        return OVERFLOW
    return total


def as_poly(spec: FieldSpec, value: Union[PlanePoly, Scalar]) -> PlanePoly:
    if isinstance(value, PlanePoly):
        return value.lift(spec) if value.spec != spec else value
    return PlanePoly.constant(spec, value)


def sum_polys(spec: FieldSpec, polys: Iterable[PlanePoly]) -> PlanePoly:
    total = PlanePoly.zero(spec)
    for p in polys:
        total = total + p
    return total
