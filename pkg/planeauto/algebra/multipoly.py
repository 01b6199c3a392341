"""Sparse n-variate polynomials with graded reverse-lexicographic order.

Used only by the conjugacy solver's elimination; the public bivariate type is
``PlanePoly``.  Over ℚ coefficients are plain ``Fraction`` values, over an
extension they are ``FieldElement`` values.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Iterator, Mapping, Optional, Sequence

from planeauto.algebra.field import FieldElement, FieldSpec, to_fraction
from planeauto.algebra.limits import limits

Monomial = tuple[int, ...]


def grevlex_key(mono: Monomial) -> tuple:
    """Sort key: larger key means larger monomial in grevlex."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class PolyRing:
    """K[v₁, …, vₙ] for named unknowns over a ``FieldSpec``."""

    def __init__(self, names: Sequence[str], spec: FieldSpec):
        self.names = tuple(names)
        self.spec = spec
        self.index = {name: i for i, name in enumerate(self.names)}

    @property
    def nvars(self) -> int:
        return len(self.names)

    def coerce(self, value: Any):
        if self.spec.is_rationals:
            if isinstance(value, FieldElement):
                return value.rational_value()
            return to_fraction(value)
        if isinstance(value, FieldElement):
            return value if value.spec == self.spec else self.spec.element(value)
        return self.spec.element(value)

    def to_field(self, value: Any) -> FieldElement:
        if isinstance(value, FieldElement):
            return value
        return self.spec.element(value)

    def zero(self) -> MultiPoly:
        return MultiPoly(self, {})

    def one(self) -> MultiPoly:
        return self.const(1)

    def const(self, value: Any) -> MultiPoly:
        return MultiPoly(self, {(0,) * self.nvars: self.coerce(value)})

    def gen(self, name: str) -> MultiPoly:
        mono = [0] * self.nvars
        mono[self.index[name]] = 1
        return MultiPoly(self, {tuple(mono): self.coerce(1)})

    def gens(self) -> list[MultiPoly]:
        return [self.gen(name) for name in self.names]

    def monomial(self, mono: Monomial, coeff: Any = 1) -> MultiPoly:
        return MultiPoly(self, {tuple(mono): self.coerce(coeff)})

    def __eq__(self, other: Any) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.names == other.names
            and self.spec == other.spec
        )

    def __hash__(self) -> int:
        return hash((self.names, self.spec))

    def __repr__(self) -> str:
        return f"PolyRing({', '.join(self.names)} over {self.spec})"


class MultiPoly:
    __slots__ = ("ring", "terms", "_lm")

    def __init__(self, ring: PolyRing, terms: Mapping[Monomial, Any], prune: bool = True):
        self.ring = ring
        if prune:
            self.terms = {m: c for m, c in terms.items() if c}
        else:
            self.terms = dict(terms)
        self._lm: Optional[Monomial] = None
        if len(self.terms) > 1024:
            limits.check_terms(len(self.terms))

    # Structure

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __iter__(self) -> Iterator[tuple[Monomial, Any]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def lm(self) -> Monomial:
        if self._lm is None:
            if not self.terms:
                raise ValueError("the zero polynomial has no leading monomial")
            self._lm = max(self.terms, key=grevlex_key)
        return self._lm

    @property
    def lc(self):
        return self.terms[self.lm]

    @property
    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def degree_in(self, var: int) -> int:
        return max((m[var] for m in self.terms), default=-1)

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def is_one(self) -> bool:
        zero = (0,) * self.ring.nvars
        return list(self.terms) == [zero] and self.terms[zero] == 1

    # Arithmetic

    def _combine(self, other: MultiPoly, sign: int) -> MultiPoly:
        res = dict(self.terms)
        for m, c in other.terms.items():
            if sign < 0:
                c = -c
            value = res.get(m)
            value = c if value is None else value + c
            if value:
                res[m] = value
            else:
                res.pop(m, None)
        return MultiPoly(self.ring, res, prune=False)

    def __add__(self, other: Any) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other: Any) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            other = self.ring.const(other)
        return self._combine(other, -1)

    def __rsub__(self, other: Any) -> MultiPoly:
        return (-self) + other

    def __neg__(self) -> MultiPoly:
        return MultiPoly(self.ring, {m: -c for m, c in self.terms.items()}, False)

    def scale(self, coeff: Any) -> MultiPoly:
        coeff = self.ring.coerce(coeff)
        if not coeff:
            return self.ring.zero()
        return MultiPoly(self.ring, {m: c * coeff for m, c in self.terms.items()}, False)

    def mul_term(self, mono: Monomial, coeff: Any) -> MultiPoly:
        if not coeff:
            return self.ring.zero()
        return MultiPoly(
            self.ring,
            {mono_mul(m, mono): c * coeff for m, c in self.terms.items()},
            False,
        )

    def __mul__(self, other: Any) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        res: dict[Monomial, Any] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                value = res.get(m)
                res[m] = c1 * c2 if value is None else value + c1 * c2
        return MultiPoly(self.ring, res)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        result, base = self.ring.one(), self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> MultiPoly:
        lc = self.lc
        if lc == 1:
            return self
        inv = 1 / lc
        return MultiPoly(self.ring, {m: c * inv for m, c in self.terms.items()}, False)

    def substitute(self, var: int, value: Any) -> MultiPoly:
        """Replace unknown ``var`` by the constant ``value``."""
        value = self.ring.coerce(value)
        res: dict[Monomial, Any] = {}
        for m, c in self.terms.items():
            e = m[var]
            coeff = c * value**e if e else c
            mono = m[:var] + (0,) + m[var + 1 :]
            current = res.get(mono)
            res[mono] = coeff if current is None else current + coeff
        return MultiPoly(self.ring, res)

    def evaluate(self, point: Sequence[Any]):
        total = self.ring.coerce(0)
        for m, c in self.terms.items():
            term = c
            for value, e in zip(point, m):
                if e:
                    term = term * value**e
            total = total + term
        return total

    def univariate_coeffs(self, var: int) -> list:
        """Coefficients lowest degree first, when only ``var`` occurs."""
        if self.variables() - {var}:
            raise ValueError("polynomial is not univariate in the requested unknown")
        coeffs = [self.ring.coerce(0)] * (self.degree_in(var) + 1)
        for m, c in self.terms.items():
            coeffs[m[var]] = c
        return coeffs

    def max_coefficient_digits(self) -> int:
        digits = 0
        for c in self.terms.values():
            parts: Iterable[Fraction] = c.coeffs if isinstance(c, FieldElement) else (c,)
            for part in parts:
                size = max(abs(part.numerator).bit_length(), part.denominator.bit_length())
                digits = max(digits, int(size * 0.30103) + 1)
        return digits

    # Comparison and printing

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, MultiPoly):
            return self.terms == other.terms
        if not other:
            return not self.terms
        return self.is_constant() and self.terms.get((0,) * self.ring.nvars) == other

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, m)
                if e
            )
            coeff = str(c)
            if isinstance(c, FieldElement) and not c.is_rational():
                coeff = f"({coeff})"
            if not mono:
                parts.append(coeff)
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{coeff}*{mono}")
        return " + ".join(parts)

    __repr__ = __str__
