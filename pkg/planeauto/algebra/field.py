"""Exact arithmetic over ℚ and simple extensions ℚ(θ).

A ``FieldSpec`` names the field: either the rationals or ℚ[t]/(m(t)) for a
monic integer minimal polynomial ``m`` together with the index of the complex
root used to embed the field in ℂ.  ``FieldElement`` values are reduced
residues mod ``m`` with ``fractions.Fraction`` coefficients; nothing in this
module rounds.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Any, Iterable, Optional, Sequence, Union

import numpy as np
import sympy

from planeauto.exceptions import (
    DivisionByZero,
    InvalidInput,
    RootIsolationError,
    SpecMismatch,
)
from planeauto.logs import logger

Scalar = Union[int, Fraction, "FieldElement"]

GENERATOR_SYMBOL = "t"


def to_fraction(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


# Univariate helpers on coefficient lists, lowest degree first.


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _sub_scaled(a: list[Fraction], b: list[Fraction], c: Fraction, shift: int):
    """a -= c * x^shift * b, in place."""
    for i, bi in enumerate(b):
        if bi:
            a[i + shift] -= c * bi


def _divmod(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    rem = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise DivisionByZero("polynomial division by zero")
    quot = [Fraction(0)] * max(len(rem) - len(b) + 1, 0)
    lead = b[-1]
    while len(rem) >= len(b) and rem:
        shift = len(rem) - len(b)
        c = rem[-1] / lead
        quot[shift] = c
        _sub_scaled(rem, b, c, shift)
        rem.pop()
        _trim(rem)
    return quot, rem


def _mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] += ai * bj
    return out


def _sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _trim(out)


def _ext_gcd(
    a: Sequence[Fraction], b: Sequence[Fraction]
) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, s) with s·a ≡ g (mod b) and g = gcd(a, b)."""
    r0, r1 = _trim(list(a)), _trim(list(b))
    s0, s1 = [Fraction(1)], []
    while r1:
        q, r = _divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _sub(s0, _mul(q, s1))
    return r0, s0


@functools.lru_cache(maxsize=128)
def _complex_roots(minpoly: tuple[int, ...]) -> tuple[complex, ...]:
    """Roots of ``minpoly`` in the canonical order.

    Companion-matrix eigenvalues, polished by Newton steps and checked against
    the polynomial.  Sorted by decreasing real part, then decreasing imaginary
    part.
    """
    coeffs_high = np.array([float(c) for c in reversed(minpoly)], dtype=float)
    deriv = np.polyder(coeffs_high)
    roots = np.roots(coeffs_high).astype(complex)
    polished = []
    for root in roots:
        z = complex(root)
        for _ in range(8):
            dz = complex(np.polyval(deriv, z))
            if dz == 0:
                break
            step = complex(np.polyval(coeffs_high, z)) / dz
            z -= step
            if abs(step) <= 1e-17 * max(1.0, abs(z)):
                break
        scale = float(np.polyval(np.abs(coeffs_high), abs(z)))
        residual = abs(complex(np.polyval(coeffs_high, z)))
        if not np.isfinite(residual) or residual > 1e-9 * max(scale, 1.0):
            raise RootIsolationError(
                f"could not isolate a root of {list(minpoly)}: residual {residual:.3e}",
                minpoly=list(minpoly),
            )
        polished.append(z)
    polished.sort(key=lambda z: (-round(z.real, 9), -round(z.imag, 9)))
    logger.debug(f"isolated {len(polished)} roots of {list(minpoly)}", "FIELD")
    return tuple(polished)


@dataclass(frozen=True)
class FieldSpec:
    """ℚ (empty ``minpoly``) or ℚ[t]/(minpoly) with an embedding root index.

    ``minpoly`` lists integer coefficients lowest degree first and is monic.
    """

    minpoly: tuple[int, ...] = ()
    root_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "minpoly", tuple(int(c) for c in self.minpoly))
        if not self.minpoly:
            if self.root_index != 0:
                raise InvalidInput("the rationals have a single embedding")
            return
        if len(self.minpoly) < 3:
            raise InvalidInput("a simple extension needs a minimal polynomial of degree ≥ 2")
        if self.minpoly[-1] != 1:
            raise InvalidInput(f"minimal polynomial {list(self.minpoly)} is not monic")
        if not 0 <= self.root_index < self.degree:
            raise InvalidInput(
                f"embedding root index {self.root_index} out of range for degree {self.degree}"
            )

    @classmethod
    def rationals(cls) -> FieldSpec:
        return cls()

    @classmethod
    def extension(
        cls, minpoly: Sequence[int], root: Optional[int] = None, check: bool = True
    ) -> FieldSpec:
        """ℚ(θ) for ``minpoly``; irreducibility is checked with sympy unless disabled."""
        spec = cls(tuple(minpoly), root or 0)
        if check and not spec.is_rationals:
            t = sympy.Symbol(GENERATOR_SYMBOL)
            if not sympy.Poly(list(reversed(spec.minpoly)), t, domain="QQ").is_irreducible:
                raise InvalidInput(f"minimal polynomial {list(spec.minpoly)} is reducible")
        return spec

    @property
    def is_rationals(self) -> bool:
        return not self.minpoly

    @property
    def kind(self) -> str:
        return "rationals" if self.is_rationals else "simple-extension"

    @property
    def degree(self) -> int:
        return max(len(self.minpoly) - 1, 1)

    def same_field(self, other: FieldSpec) -> bool:
        return self.minpoly == other.minpoly

    def roots(self) -> tuple[complex, ...]:
        if self.is_rationals:
            return (1.0 + 0j,)
        return _complex_roots(self.minpoly)

    def embedding_root(self) -> complex:
        return self.roots()[self.root_index]

    def zero(self) -> FieldElement:
        return FieldElement(self, ())

    def one(self) -> FieldElement:
        return FieldElement(self, (1,))

    def gen(self) -> FieldElement:
        if self.is_rationals:
            raise InvalidInput("the rationals have no generator")
        return FieldElement(self, (0, 1))

    def element(self, value: Any) -> FieldElement:
        if isinstance(value, FieldElement):
            return lift(value, self)
        if isinstance(value, (list, tuple)):
            return FieldElement(self, [to_fraction(c) for c in value])
        return FieldElement(self, (to_fraction(value),))

    def to_json(self) -> Union[str, dict[str, Any]]:
        if self.is_rationals:
            return "Q"
        return {"minpoly": list(self.minpoly), "root": self.root_index}

    @classmethod
    def from_json(cls, data: Any) -> FieldSpec:
        if data in (None, "Q", "QQ"):
            return cls.rationals()
        if isinstance(data, dict) and "minpoly" in data:
            return cls.extension(data["minpoly"], data.get("root", 0))
        raise InvalidInput(f"unrecognised field description {data!r}")

    def __str__(self) -> str:
        if self.is_rationals:
            return "Q"
        return f"Q(t), t root #{self.root_index} of {_format_univariate(self.minpoly)}"


def _format_univariate(coeffs: Sequence[Any], symbol: str = GENERATOR_SYMBOL) -> str:
    parts: list[str] = []
    for power in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[power])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if power == 0:
            body = str(mag)
        else:
            mono = symbol if power == 1 else f"{symbol}^{power}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


class FieldElement:
    """An exact element of a ``FieldSpec``; immutable."""

    __slots__ = ("spec", "coeffs", "_embedded")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[Any]):
        values = _trim([to_fraction(c) for c in coeffs])
        if not spec.is_rationals and len(values) > spec.degree:
            _, values = _divmod(values, [Fraction(c) for c in spec.minpoly])
        values = values + [Fraction(0)] * (spec.degree - len(values))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "coeffs", tuple(values))
        object.__setattr__(self, "_embedded", None)

    def __setattr__(self, key, value):
        raise AttributeError("FieldElement is immutable")

    # Coercion

    def _coerce(self, other: Any) -> FieldElement:
        if isinstance(other, FieldElement):
            if not self.spec.same_field(other.spec):
                if other.is_rational():
                    return FieldElement(self.spec, (other.coeffs[0],))
                raise SpecMismatch(
                    f"operands over {self.spec} and {other.spec}",
                    left=str(self.spec),
                    right=str(other.spec),
                )
            return other
        if isinstance(other, (int, Fraction)):
            return FieldElement(self.spec, (other,))
        return NotImplemented

    def _promote(self, other: FieldElement) -> tuple[FieldElement, FieldElement]:
        """Bring a rational element up to the field of an extension operand."""
        if isinstance(other, FieldElement) and not self.spec.same_field(other.spec):
            if self.is_rational() and not other.spec.is_rationals:
                return FieldElement(other.spec, (self.coeffs[0],)), other
        return self, self._coerce(other)

    # Arithmetic

    def __add__(self, other: Any) -> FieldElement:
        a, b = self._promote(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(a.spec, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement(self.spec, [-x for x in self.coeffs])

    def __sub__(self, other: Any) -> FieldElement:
        a, b = self._promote(other)
        if b is NotImplemented:
            return NotImplemented
        return FieldElement(a.spec, [x - y for x, y in zip(a.coeffs, b.coeffs)])

    def __rsub__(self, other: Any) -> FieldElement:
        return (-self) + other

    def __mul__(self, other: Any) -> FieldElement:
        a, b = self._promote(other)
        if b is NotImplemented:
            return NotImplemented
        if a.spec.is_rationals:
            return FieldElement(a.spec, (a.coeffs[0] * b.coeffs[0],))
        return FieldElement(a.spec, _mul(a.coeffs, b.coeffs))

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if not self:
            raise DivisionByZero("division by zero in " + str(self.spec))
        if self.spec.is_rationals:
            return FieldElement(self.spec, (1 / self.coeffs[0],))
        g, s = _ext_gcd(self.coeffs, [Fraction(c) for c in self.spec.minpoly])
        # g is a nonzero constant because the minimal polynomial is irreducible.
        if len(g) != 1:
            raise DivisionByZero(
                f"{self} is a zero divisor; the minimal polynomial is reducible"
            )
        return FieldElement(self.spec, [c / g[0] for c in s])

    def __truediv__(self, other: Any) -> FieldElement:
        a, b = self._promote(other)
        if b is NotImplemented:
            return NotImplemented
        return a * b.inverse()

    def __rtruediv__(self, other: Any) -> FieldElement:
        return self.inverse() * other

    def __pow__(self, exponent: int) -> FieldElement:
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        n = abs(exponent)
        result = self.spec.one()
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # Predicates

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, FieldElement):
            if self.spec.same_field(other.spec):
                return self.coeffs == other.coeffs
            if self.is_rational() and other.is_rational():
                return self.coeffs[0] == other.coeffs[0]
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.spec.minpoly, self.coeffs))

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def is_one(self) -> bool:
        return self.is_rational() and self.coeffs[0] == 1

    # Numerics

    def embed(self) -> complex:
        """Σ cᵢ·rootⁱ in complex double for the spec's embedding root."""
        if self._embedded is None:
            if self.is_rational():
                value = complex(float(self.coeffs[0]))
            else:
                root = self.spec.embedding_root()
                value = 0j
                for c in reversed(self.coeffs):
                    value = value * root + float(c)
            object.__setattr__(self, "_embedded", value)
        return self._embedded

    # Serialization

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, spec: FieldSpec, data: Any) -> FieldElement:
        return spec.element(data)

    def __str__(self) -> str:
        if self.is_rational():
            return str(self.coeffs[0])
        return _format_univariate(self.coeffs)

    def __repr__(self) -> str:
        return f"FieldElement({self})"


RATIONALS = FieldSpec.rationals()


def lift(element: Scalar, spec: FieldSpec) -> FieldElement:
    """Embed ``element`` into ``spec``; only rationals move between fields."""
    if isinstance(element, FieldElement):
        if element.spec == spec:
            return element
        if element.spec.same_field(spec):
            return FieldElement(spec, element.coeffs)
        if element.is_rational():
            return FieldElement(spec, (element.coeffs[0],))
        raise SpecMismatch(f"cannot move {element} from {element.spec} to {spec}")
    return FieldElement(spec, (to_fraction(element),))


def field_arith(op: str, a: FieldElement, b: FieldElement) -> FieldElement:
    if not a.spec.same_field(b.spec):
        raise SpecMismatch(f"operands over {a.spec} and {b.spec}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown field operation {op!r}")


def embed_complex(a: FieldElement) -> complex:
    return a.embed()
