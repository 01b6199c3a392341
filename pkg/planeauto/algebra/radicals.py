"""Exact roots: k-th roots inside a field, radical and cyclotomic extensions,
and systems of binomial (monomial = constant) equations.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import sympy
from sympy import integer_nthroot

from planeauto.algebra.field import RATIONALS, FieldElement, FieldSpec, lift
from planeauto.algebra.groebner import GroebnerCaps, rational_points
from planeauto.algebra.multipoly import PolyRing
from planeauto.exceptions import FieldExtensionNeeded, ReducibleRadical
from planeauto.logs import logger


def rational_nth_root(value: Fraction, k: int) -> Optional[Fraction]:
    """The real k-th root of ``value`` when it is rational (positive for even k)."""
    if value == 0:
        return Fraction(0)
    if value < 0:
        if k % 2 == 0:
            return None
        root = rational_nth_root(-value, k)
        return -root if root is not None else None
    num, exact_num = integer_nthroot(value.numerator, k)
    den, exact_den = integer_nthroot(value.denominator, k)
    if exact_num and exact_den:
        return Fraction(int(num), int(den))
    return None


def nth_root_in_field(c: FieldElement, k: int) -> Optional[FieldElement]:
    """Some α in c's field with α^k = c, or None when no such α exists.

    Over ℚ the real root is preferred.  Over an extension a rational root is
    tried first, then the coordinates of α are found as rational points of
    α^k − c = 0.
    """
    if k <= 0:
        raise ValueError("root order must be positive")
    if k == 1 or not c:
        return c
    if c.is_rational():
        root = rational_nth_root(c.rational_value(), k)
        if root is not None:
            return lift(root, c.spec)
        if c.spec.is_rationals:
            return None
    spec = c.spec
    names = [f"a{i}" for i in range(spec.degree)]
    ring = PolyRing(names, RATIONALS)
    # α = Σ aᵢ θⁱ with θ-multiplication written out coordinate-wise.
    alpha = [ring.gen(name) for name in names]
    power = [ring.one()] + [ring.zero()] * (spec.degree - 1)
    for _ in range(k):
        power = _multiply_coordinates(power, alpha, spec, ring)
    equations = [p - target for p, target in zip(power, c.coeffs)]
    equations = [e for e in equations if e]
    if not equations:
        return None
    search = rational_points(equations, GroebnerCaps(max_pairs=10**4))
    if not search.points:
        return None
    point = min(search.points, key=lambda pt: [(-float(v), abs(v.denominator)) for v in pt])
    return FieldElement(spec, point)


def _multiply_coordinates(a, b, spec: FieldSpec, ring: PolyRing):
    """Product of two ℚ(θ)-vectors whose coordinates are polynomials."""
    m = spec.degree
    raw = [ring.zero() for _ in range(2 * m - 1)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                raw[i + j] = raw[i + j] + ai * bj
    minpoly = spec.minpoly
    for top in range(2 * m - 2, m - 1, -1):
        lead = raw[top]
        if not lead:
            continue
        for idx in range(m):
            coeff = minpoly[idx]
            if coeff:
                raw[top - m + idx] = raw[top - m + idx] - lead * coeff
        raw[top] = ring.zero()
    return raw[:m]


@dataclass(frozen=True)
class RadicalExtension:
    spec: FieldSpec
    alpha: FieldElement
    order: int
    radicand: int

    @property
    def minpoly(self) -> list[int]:
        return list(self.spec.minpoly)


def _strip_powers(n: int, k: int) -> tuple[int, int]:
    """Write n = s^k · n' with n' free of k-th power divisors; return (s, n')."""
    sign = -1 if n < 0 else 1
    n = abs(n)
    scale = 1
    for prime, exp in sympy.factorint(n).items():
        q = exp // k
        if q:
            scale *= prime**q
            n //= prime ** (q * k)
    return scale, sign * n


def radical_extension(c: FieldElement | Fraction | int, k: int) -> RadicalExtension:
    """ℚ(c^{1/k}) for rational ``c`` as ℚ[t]/(t^e − N) and α with α^k = c.

    With c = p/q, α = p/θ where θ^k = q·p^{k−1}; k-th power factors of the
    radicand are stripped and the exponent is lowered while the radicand is a
    perfect power.  Raises ``ReducibleRadical`` when t^e − N still factors.
    """
    value = c.rational_value() if isinstance(c, FieldElement) else Fraction(c)
    if value == 0:
        raise ValueError("zero has no radical extension")
    p, q = value.numerator, value.denominator
    radicand = q * p ** (k - 1)
    scale, radicand = _strip_powers(radicand, k)
    exponent = k
    # θ^k = radicand; when radicand = M^j with j | k, θ^(k/j) = M is enough.
    for j in sorted(sympy.divisors(k), reverse=True):
        if j == 1:
            continue
        root = rational_nth_root(Fraction(radicand), j)
        if root is not None and root.denominator == 1:
            exponent, radicand = k // j, int(root)
            break
    # α = p / (scale · θ') with θ'^exponent = radicand.
    if exponent == 1:
        alpha = Fraction(p, scale * radicand)
        raise ValueError(f"{value} already has the rational {k}-th root {alpha}")
    minpoly = [-radicand] + [0] * (exponent - 1) + [1]
    t = sympy.Symbol("t")
    poly = sympy.Poly(list(reversed(minpoly)), t, domain="QQ")
    if not poly.is_irreducible:
        factors = [
            [int(coeff) for coeff in reversed(f.all_coeffs())]
            for f, _ in poly.factor_list()[1]
        ]
        raise ReducibleRadical(
            f"t^{exponent} - {radicand} factors over Q", factors=factors
        )
    spec = FieldSpec(tuple(minpoly), _real_root_index(minpoly, radicand, exponent))
    # θ^exponent = M implies θ^k = M^j, the stripped radicand.
    alpha = FieldElement(spec, (p,)) / (spec.gen() * scale)
    logger.debug(f"radical extension t^{exponent} = {radicand} for {value}^(1/{k})", "RADICAL")
    return RadicalExtension(spec, alpha, k, radicand)


def _real_root_index(minpoly: Sequence[int], radicand: int, exponent: int) -> int:
    """Index of the real root (if any) in the canonical root order."""
    spec = FieldSpec(tuple(minpoly))
    target = (
        abs(radicand) ** (1 / exponent) * (-1 if radicand < 0 else 1)
        if radicand > 0 or exponent % 2
        else None
    )
    if target is None:
        return 0
    roots = spec.roots()
    return min(range(len(roots)), key=lambda i: abs(roots[i] - target))


def suggested_minpoly(value: Fraction, k: int) -> list[int]:
    """The x^k − N polynomial a user would adjoin to take a k-th root of ``value``."""
    p, q = value.numerator, value.denominator
    _, radicand = _strip_powers(q * p ** (k - 1), k)
    return [-radicand] + [0] * (k - 1) + [1]


def cyclotomic_field(n: int) -> tuple[FieldSpec, FieldElement]:
    """ℚ(ζ_n) with ζ embedded as exp(2πi/n); ℚ itself for n ≤ 2."""
    if n <= 2:
        zeta = Fraction(1) if n == 1 else Fraction(-1)
        return RATIONALS, RATIONALS.element(zeta)
    x = sympy.Symbol("x")
    coeffs = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
    probe = FieldSpec(tuple(coeffs))
    target = cmath.exp(2j * math.pi / n)
    roots = probe.roots()
    index = min(range(len(roots)), key=lambda i: abs(roots[i] - target))
    spec = FieldSpec(tuple(coeffs), index)
    return spec, spec.gen()


@dataclass
class BinomialSolution:
    spec: FieldSpec
    values: list[FieldElement]
    extension: Optional[RadicalExtension] = None


def solve_binomial_system(
    rows: Sequence[tuple[Sequence[int], FieldElement]],
    n: int,
    spec: FieldSpec,
    allow_extension: bool = True,
) -> Optional[BinomialSolution]:
    """Solve Π_j x_j^{a_ij} = c_i for nonzero unknowns x_0 … x_{n−1}.

    Integer row reduction brings the exponent matrix to echelon form while
    the constants combine multiplicatively.  Back substitution takes one root
    per pivot; unknowns without a pivot are set to 1.  At most one radical
    extension of ℚ is adjoined.  Returns None when the system is inconsistent.
    """
    work = [([int(e) for e in exps], lift(const, spec)) for exps, const in rows]
    pivots: list[tuple[int, list[int], FieldElement]] = []
    remaining = work
    for col in range(n):
        active = [r for r in remaining if r[0][col] != 0]
        rest = [r for r in remaining if r[0][col] == 0]
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[0][col]))
            pivot_vec, pivot_const = active[0]
            reduced = [active[0]]
            for vec, const in active[1:]:
                factor = vec[col] // pivot_vec[col]
                new_vec = [a - factor * b for a, b in zip(vec, pivot_vec)]
                new_const = const * pivot_const ** (-factor)
                if new_vec[col] != 0:
                    reduced.append((new_vec, new_const))
                else:
                    rest.append((new_vec, new_const))
            active = reduced
        if active:
            vec, const = active[0]
            pivots.append((col, vec, const))
        remaining = rest
    for vec, const in remaining:
        if any(vec):
            continue
        if const != 1:
            return None

    values: list[Optional[FieldElement]] = [None] * n
    extension: Optional[RadicalExtension] = None
    for col, vec, const in reversed(pivots):
        rhs = lift(const, spec)
        for j in range(col + 1, n):
            if vec[j]:
                if values[j] is None:
                    values[j] = spec.one()
                rhs = rhs * values[j] ** (-vec[j])
        k = vec[col]
        if k < 0:
            rhs, k = rhs.inverse(), -k
        root = nth_root_in_field(rhs, k)
        if root is None:
            if not (allow_extension and extension is None and spec.is_rationals and rhs.is_rational()):
                minpoly = suggested_minpoly(rhs.rational_value(), k) if rhs.is_rational() else None
                raise FieldExtensionNeeded(
                    f"the system needs a {k}-th root of {rhs}", minpoly=minpoly
                )
            extension = radical_extension(rhs, k)
            spec = extension.spec
            values = [lift(v, spec) if v is not None else None for v in values]
            root = extension.alpha
        values[col] = root
    final = [v if v is not None else spec.one() for v in values]
    return BinomialSolution(spec, [lift(v, spec) for v in final], extension)
