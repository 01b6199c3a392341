"""Buchberger's algorithm and point extraction for small zero-dimensional systems."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Sequence

import sympy

from planeauto.algebra.field import GENERATOR_SYMBOL, FieldElement, FieldSpec
from planeauto.algebra.multipoly import (
    Monomial,
    MultiPoly,
    PolyRing,
    grevlex_key,
    mono_div,
    mono_divides,
    mono_lcm,
)
from planeauto.exceptions import UndecidedAtCap
from planeauto.logs import logger


@dataclass
class GroebnerStats:
    pairs_considered: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    skipped_coprime: int = 0
    skipped_chain: int = 0
    basis_size: int = 0

    def dict(self) -> dict[str, int]:
        return dict(self.__dict__)


@dataclass
class GroebnerCaps:
    max_pairs: int = 10**5
    max_coefficient_digits: int = 10**4
    max_degree: Optional[int] = None


@dataclass
class GroebnerResult:
    ring: PolyRing
    basis: list[MultiPoly]
    stats: GroebnerStats

    @property
    def is_trivial(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    @property
    def leading_monomials(self) -> list[Monomial]:
        return [g.lm for g in self.basis]


def normal_form(f: MultiPoly, basis: Sequence[MultiPoly]) -> MultiPoly:
    """Fully reduce ``f`` modulo ``basis``."""
    if not f or not basis:
        return f
    pending = dict(f.terms)
    remainder: dict[Monomial, Any] = {}
    leads = [(g.lm, g.lc, g) for g in basis if g]
    while pending:
        mono = max(pending, key=grevlex_key)
        coeff = pending[mono]
        for lm, lc, g in leads:
            if mono_divides(lm, mono):
                factor = coeff / lc
                shift = mono_div(mono, lm)
                for gm, gc in g.terms.items():
                    target = tuple(a + b for a, b in zip(gm, shift))
                    value = pending.get(target)
                    value = -factor * gc if value is None else value - factor * gc
                    if value:
                        pending[target] = value
                    else:
                        pending.pop(target, None)
                break
        else:
            remainder[mono] = coeff
            del pending[mono]
    return MultiPoly(f.ring, remainder, prune=False)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lcm = mono_lcm(f.lm, g.lm)
    return f.mul_term(mono_div(lcm, f.lm), 1 / f.lc) - g.mul_term(
        mono_div(lcm, g.lm), 1 / g.lc
    )


def _coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def groebner_basis(
    polys: Sequence[MultiPoly], caps: Optional[GroebnerCaps] = None
) -> GroebnerResult:
    """Reduced Gröbner basis in grevlex order.

    Pairs are processed smallest lcm first, skipping pairs with coprime
    leading monomials and pairs covered by the chain criterion.  Hitting a
    cap raises ``UndecidedAtCap``.
    """
    caps = caps or GroebnerCaps()
    polys = [p for p in polys if p]
    if not polys:
        raise ValueError("groebner_basis needs at least one nonzero generator")
    ring = polys[0].ring
    stats = GroebnerStats()

    basis: list[MultiPoly] = []
    pending: set[tuple[int, int]] = set()

    def add(poly: MultiPoly) -> None:
        poly = poly.monic()
        index = len(basis)
        basis.append(poly)
        for i in range(index):
            pending.add((i, index))
        digits = poly.max_coefficient_digits()
        if digits > caps.max_coefficient_digits:
            raise UndecidedAtCap(
                f"coefficient size {digits} digits exceeds the cap",
                cap="coefficient_digits",
                limit=caps.max_coefficient_digits,
            )

    for p in polys:
        reduced = normal_form(p, basis)
        if reduced:
            add(reduced)
            if reduced.is_constant():
                break

    while pending and not any(g.is_constant() for g in basis):
        i, j = min(
            pending, key=lambda ij: (grevlex_key(mono_lcm(basis[ij[0]].lm, basis[ij[1]].lm)), ij)
        )
        pending.discard((i, j))
        stats.pairs_considered += 1
        if stats.pairs_considered > caps.max_pairs:
            raise UndecidedAtCap(
                f"more than {caps.max_pairs} critical pairs",
                cap="pairs",
                limit=caps.max_pairs,
            )
        lm_i, lm_j = basis[i].lm, basis[j].lm
        if _coprime(lm_i, lm_j):
            stats.skipped_coprime += 1
            continue
        lcm = mono_lcm(lm_i, lm_j)
        if any(
            k not in (i, j)
            and mono_divides(basis[k].lm, lcm)
            and (min(i, k), max(i, k)) not in pending
            and (min(j, k), max(j, k)) not in pending
            for k in range(len(basis))
        ):
            stats.skipped_chain += 1
            continue
        if caps.max_degree is not None and sum(lcm) > caps.max_degree:
            raise UndecidedAtCap(
                f"critical pair of degree {sum(lcm)} beyond the degree guard",
                cap="degree",
                limit=caps.max_degree,
            )
        stats.pairs_reduced += 1
        remainder = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if not remainder:
            stats.zero_reductions += 1
            continue
        add(remainder)

    reduced = _reduce_basis(basis)
    stats.basis_size = len(reduced)
    logger.debug(
        f"groebner: {stats.pairs_considered} pairs, basis of {len(reduced)}",
        "GROEBNER",
    )
    return GroebnerResult(ring, reduced, stats)


def _reduce_basis(basis: list[MultiPoly]) -> list[MultiPoly]:
    if any(g.is_constant() for g in basis):
        return [basis[0].ring.one()]
    minimal: list[MultiPoly] = []
    for g in sorted(basis, key=lambda p: grevlex_key(p.lm)):
        if not any(mono_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1 :]
        reduced.append(normal_form(g, others).monic())
    return sorted(reduced, key=lambda p: grevlex_key(p.lm))


def is_zero_dimensional(result: GroebnerResult) -> bool:
    """Every unknown has a pure power among the leading monomials."""
    if result.is_trivial:
        return True
    nvars = result.ring.nvars
    found = [False] * nvars
    for lm in result.leading_monomials:
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            found[support[0]] = True
    return all(found)


def standard_monomials(result: GroebnerResult, limit: int = 100_000) -> list[Monomial]:
    """Monomials outside the leading-term ideal (finite for zero-dimensional ideals)."""
    if result.is_trivial:
        return []
    nvars = result.ring.nvars
    leads = result.leading_monomials
    bounds = []
    for var in range(nvars):
        pure = [lm[var] for lm in leads if sum(lm) == lm[var] and lm[var]]
        if not pure:
            raise ValueError("ideal is not zero-dimensional")
        bounds.append(min(pure))
    out = []
    for mono in itertools.product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, mono) for lm in leads):
            out.append(tuple(mono))
            if len(out) > limit:
                raise UndecidedAtCap("too many standard monomials", cap="standard_monomials", limit=limit)
    return out


def eliminant(result: GroebnerResult, var: int, degree_cap: int = 64) -> list:
    """Monic univariate polynomial in unknown ``var`` generating I ∩ K[var].

    Found as the first linear dependency among the normal forms of var^k.
    Coefficients are returned lowest degree first.
    """
    ring = result.ring
    one = ring.coerce(1)
    rows: list[tuple[Monomial, dict, dict]] = []
    power = ring.one()
    gen = ring.gen(ring.names[var])
    for k in range(degree_cap + 1):
        if k:
            power = normal_form(power * gen, result.basis)
        vec = dict(power.terms)
        combo: dict[int, Any] = {k: one}
        for pivot, row_vec, row_combo in rows:
            factor = vec.get(pivot)
            if not factor:
                continue
            for m, c in row_vec.items():
                value = vec.get(m)
                value = -factor * c if value is None else value - factor * c
                if value:
                    vec[m] = value
                else:
                    vec.pop(m, None)
            for j, c in row_combo.items():
                value = combo.get(j)
                value = -factor * c if value is None else value - factor * c
                combo[j] = value
        if not vec:
            coeffs = [combo.get(j, ring.coerce(0)) for j in range(k + 1)]
            return coeffs
        pivot = max(vec, key=grevlex_key)
        inv = 1 / vec[pivot]
        rows.append(
            (
                pivot,
                {m: c * inv for m, c in vec.items()},
                {j: c * inv for j, c in combo.items()},
            )
        )
    raise UndecidedAtCap(
        f"eliminant in {ring.names[var]} has degree above {degree_cap}",
        cap="eliminant_degree",
        limit=degree_cap,
    )


@dataclass
class ResidualSystem:
    """A branch of the solution set that needs a field extension (or is infinite)."""

    variable: str
    eliminant: list[str]
    assigned: dict[str, str]
    kind: str = "irrational"

    def dict(self) -> dict[str, Any]:
        return {
            "variable": self.variable,
            "eliminant": self.eliminant,
            "assigned": self.assigned,
            "kind": self.kind,
        }


@dataclass
class PointSearch:
    points: list[list[Any]] = field(default_factory=list)
    residuals: list[ResidualSystem] = field(default_factory=list)
    trivial: bool = False
    stats: list[GroebnerStats] = field(default_factory=list)


def _fraction(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def _rational_roots(coeffs: Sequence[Any]) -> tuple[list[Fraction], list[list[Fraction]]]:
    """Rational roots of a univariate polynomial and its irreducible non-linear factors."""
    x = sympy.Symbol("x")
    rational = [c.rational_value() if isinstance(c, FieldElement) else c for c in coeffs]
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(rational)], x, domain="QQ")
    roots = [_fraction(r) for r in poly.ground_roots()]
    others = []
    for factor, _ in poly.factor_list()[1]:
        if factor.degree() > 1:
            others.append([_fraction(c) for c in reversed(factor.all_coeffs())])
    return sorted(roots), others


def _algebraic_domain(spec: FieldSpec):
    """sympy's ℚ(θ) with θ sent to a root of ``spec.minpoly``, plus that generator."""
    t = sympy.Symbol(GENERATOR_SYMBOL)
    root = sympy.CRootOf(sympy.Poly(list(reversed(spec.minpoly)), t), 0)
    domain = sympy.QQ.algebraic_field(root)
    return domain, domain.from_sympy(root)


def _horner(coeffs: Sequence[FieldElement], value: FieldElement) -> FieldElement:
    total = value.spec.zero()
    for c in reversed(coeffs):
        total = total * value + c
    return total


def _extension_roots(
    coeffs: Sequence[FieldElement], spec: FieldSpec
) -> tuple[list[FieldElement], list[list[FieldElement]]]:
    """Roots in ℚ(θ) of a univariate polynomial over ℚ(θ), and its other irreducible factors.

    Every linear factor is checked by substitution; one that fails is kept as a
    factor, so each root of the input lands in exactly one of the two lists.
    """
    domain, theta = _algebraic_domain(spec)

    def to_domain(element: FieldElement):
        value = domain.zero
        for i, c in enumerate(element.coeffs):
            if c:
                value += domain.from_sympy(sympy.Rational(c.numerator, c.denominator)) * theta**i
        return value

    def from_domain(value) -> FieldElement:
        return FieldElement(spec, [_fraction(c) for c in reversed(value.to_list())])

    x = sympy.Symbol("x")
    poly = sympy.Poly([to_domain(spec.element(c)) for c in reversed(coeffs)], x, domain=domain)
    roots: list[FieldElement] = []
    others: list[list[FieldElement]] = []
    for factor, _ in poly.factor_list()[1]:
        factor_coeffs = [from_domain(c) for c in reversed(factor.rep.to_list())]
        if len(factor_coeffs) == 2:
            root = -factor_coeffs[0] / factor_coeffs[1]
            if not _horner(coeffs, spec.element(root)):
                roots.append(root)
                continue
            logger.warn(f"linear factor {factor} did not verify; kept as residual", "GROEBNER")
        others.append(factor_coeffs)
    return sorted(roots, key=lambda r: r.to_json()), others


def rational_points(
    polys: Sequence[MultiPoly],
    caps: Optional[GroebnerCaps] = None,
    eliminant_degree_cap: int = 64,
    max_points: int = 256,
) -> PointSearch:
    """All points of a zero-dimensional system with coordinates in the base field.

    Branches whose coordinates need a field extension are returned as
    ``ResidualSystem`` entries carrying the eliminant factor.
    """
    search = PointSearch()
    ring = polys[0].ring
    first = groebner_basis(polys, caps)
    search.stats.append(first.stats)
    if first.is_trivial:
        search.trivial = True
        return search

    def assigned_names(values: dict[int, Any]) -> dict[str, str]:
        return {ring.names[i]: str(v) for i, v in sorted(values.items())}

    def explore(result: GroebnerResult, values: dict[int, Any]) -> None:
        if result.is_trivial or len(search.points) >= max_points:
            return
        if not is_zero_dimensional(result):
            search.residuals.append(
                ResidualSystem("*", [str(g) for g in result.basis], assigned_names(values), "positive-dimensional")
            )
            return
        values = dict(values)
        for g in result.basis:
            if g.total_degree == 1 and len(g.variables()) == 1 and len(g) <= 2:
                var = next(iter(g.variables()))
                values[var] = -g.terms.get((0,) * ring.nvars, ring.coerce(0))
        open_vars = [v for v in range(ring.nvars) if v not in values]
        if not open_vars:
            search.points.append([values[v] for v in range(ring.nvars)])
            return
        var = open_vars[0]
        coeffs = eliminant(result, var, eliminant_degree_cap)
        if ring.spec.is_rationals:
            roots, others = _rational_roots(coeffs)
        else:
            roots, others = _extension_roots(coeffs, ring.spec)
        for other in others:
            search.residuals.append(
                ResidualSystem(ring.names[var], [str(c) for c in other], assigned_names(values))
            )
        if not roots and not others:
            search.residuals.append(
                ResidualSystem(ring.names[var], [str(c) for c in coeffs], assigned_names(values))
            )
        gen = ring.gen(ring.names[var])
        for root in roots:
            branch = groebner_basis(list(result.basis) + [gen - root], caps)
            search.stats.append(branch.stats)
            explore(branch, {**values, var: ring.coerce(root)})

    explore(first, {})
    logger.debug(
        f"rational points: {len(search.points)} found, {len(search.residuals)} residual branches",
        "GROEBNER",
    )
    return search
