"""Jung–van der Kulk decomposition of plane automorphisms.

A ``JungWord`` lists factors in composition order: ``[F1, F2, F3]`` is the
map F1 ∘ F2 ∘ F3.  Factors are affine maps or elementary maps
(αx + p(y), βy + γ).  Maps in both groups (triangular affine maps) are
absorbed into a neighbouring elementary factor during reduction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Sequence, Union

from planeauto.algebra.field import FieldElement, FieldSpec, lift
from planeauto.algebra.plane_poly import PlanePoly, format_poly, poly_compose2
from planeauto.automorphisms.polymap import PolyMap, compose_maps
from planeauto.exceptions import InvalidInput, NotAnAutomorphism
from planeauto.logs import logger


@dataclass(frozen=True)
class AffineFactor:
    """(x, y) ↦ (a11·x + a12·y + t1, a21·x + a22·y + t2)."""

    a11: FieldElement
    a12: FieldElement
    a21: FieldElement
    a22: FieldElement
    t1: FieldElement
    t2: FieldElement

    kind = "affine"

    def __post_init__(self):
        if not self.det:
            raise NotAnAutomorphism("singular affine factor")

    @classmethod
    def from_map(cls, f: PolyMap) -> AffineFactor:
        if f.degree > 1:
            raise ValueError(f"{f} is not affine")
        p, q = f.p, f.q
        return cls(
            p.coefficient(1, 0), p.coefficient(0, 1), q.coefficient(1, 0),
            q.coefficient(0, 1), p.coefficient(0, 0), q.coefficient(0, 0),
        )

    @classmethod
    def swap(cls, spec: FieldSpec) -> AffineFactor:
        zero, one = spec.zero(), spec.one()
        return cls(zero, one, one, zero, zero, zero)

    @classmethod
    def identity(cls, spec: FieldSpec) -> AffineFactor:
        zero, one = spec.zero(), spec.one()
        return cls(one, zero, zero, one, zero, zero)

    @property
    def spec(self) -> FieldSpec:
        return self.a11.spec

    @property
    def det(self) -> FieldElement:
        return self.a11 * self.a22 - self.a12 * self.a21

    @property
    def is_triangular(self) -> bool:
        """In the intersection with the elementary group (a21 = 0)."""
        return not self.a21

    def is_identity(self) -> bool:
        return (
            self.a11 == 1 and self.a22 == 1 and not self.a12 and not self.a21
            and not self.t1 and not self.t2
        )

    def to_map(self) -> PolyMap:
        spec = self.spec
        x, y = PlanePoly.x(spec), PlanePoly.y(spec)
        return PolyMap(
            x.scale(self.a11) + y.scale(self.a12) + self.t1,
            x.scale(self.a21) + y.scale(self.a22) + self.t2,
            spec,
        )

    def compose(self, other: AffineFactor) -> AffineFactor:
        """self ∘ other."""
        return AffineFactor(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
            self.a11 * other.t1 + self.a12 * other.t2 + self.t1,
            self.a21 * other.t1 + self.a22 * other.t2 + self.t2,
        )

    def inverse(self) -> AffineFactor:
        inv = self.det.inverse()
        b11, b12 = self.a22 * inv, -self.a12 * inv
        b21, b22 = -self.a21 * inv, self.a11 * inv
        return AffineFactor(
            b11, b12, b21, b22,
            -(b11 * self.t1 + b12 * self.t2),
            -(b21 * self.t1 + b22 * self.t2),
        )

    def as_elementary(self) -> ElementaryFactor:
        if not self.is_triangular:
            raise ValueError("only triangular affine maps are elementary")
        spec = self.spec
        return ElementaryFactor(
            self.a11, PlanePoly.monomial(spec, 0, 1, self.a12) + self.t1, self.a22, self.t2
        )

    def bruhat(self) -> tuple[ElementaryFactor, ElementaryFactor]:
        """(T1, T2) triangular with self = T1 ∘ swap ∘ T2; needs a21 ≠ 0."""
        if self.is_triangular:
            raise ValueError("triangular affine maps have no swap in their Bruhat cell")
        spec = self.spec
        one, zero = spec.one(), spec.zero()
        t2 = ElementaryFactor(self.a21, PlanePoly.monomial(spec, 0, 1, self.a22) + self.t2, one, zero)
        beta = self.a11 / self.a21
        alpha = self.a12 - beta * self.a22
        gamma = self.t1 - beta * self.t2
        t1 = ElementaryFactor(alpha, PlanePoly.monomial(spec, 0, 1, beta) + gamma, one, zero)
        return t1, t2

    def to_json(self) -> dict[str, Any]:
        return {
            "type": self.kind,
            "matrix": [[str(self.a11), str(self.a12)], [str(self.a21), str(self.a22)]],
            "translation": [str(self.t1), str(self.t2)],
        }

    def __str__(self) -> str:
        return f"Affine{self.to_map()}"


@dataclass(frozen=True)
class ElementaryFactor:
    """(x, y) ↦ (α·x + p(y), β·y + γ) with α, β ≠ 0."""

    alpha: FieldElement
    p: PlanePoly
    beta: FieldElement
    gamma: FieldElement

    kind = "elementary"

    def __post_init__(self):
        if not self.alpha or not self.beta:
            raise NotAnAutomorphism("elementary factor with vanishing α or β")
        if self.p.variables() - {"y"}:
            raise ValueError(f"elementary factor needs p in y alone, got {self.p}")

    @classmethod
    def shear(cls, spec: FieldSpec, p: PlanePoly) -> ElementaryFactor:
        """(x + p(y), y)."""
        return cls(spec.one(), p, spec.one(), spec.zero())

    @property
    def spec(self) -> FieldSpec:
        return self.alpha.spec

    @property
    def degree(self) -> int:
        return int(max(self.p.degree, 1))

    @property
    def is_affine(self) -> bool:
        return self.p.degree <= 1

    def to_map(self) -> PolyMap:
        spec = self.spec
        x, y = PlanePoly.x(spec), PlanePoly.y(spec)
        return PolyMap(x.scale(self.alpha) + self.p, y.scale(self.beta) + self.gamma, spec)

    def compose(self, other: ElementaryFactor) -> ElementaryFactor:
        """self ∘ other, again elementary."""
        spec = self.spec
        y = PlanePoly.y(spec)
        inner_y = y.scale(other.beta) + other.gamma
        shifted = poly_compose2(self.p, PlanePoly.x(spec), inner_y)
        return ElementaryFactor(
            self.alpha * other.alpha,
            other.p.scale(self.alpha) + shifted,
            self.beta * other.beta,
            self.beta * other.gamma + self.gamma,
        )

    def inverse(self) -> ElementaryFactor:
        spec = self.spec
        inv_alpha, inv_beta = self.alpha.inverse(), self.beta.inverse()
        y_back = PlanePoly.y(spec).scale(inv_beta) - self.gamma * inv_beta
        p_back = poly_compose2(self.p, PlanePoly.x(spec), y_back)
        return ElementaryFactor(inv_alpha, -p_back.scale(inv_alpha), inv_beta, -self.gamma * inv_beta)

    def as_affine(self) -> AffineFactor:
        if not self.is_affine:
            raise ValueError("elementary factor of degree ≥ 2 is not affine")
        return AffineFactor(
            self.alpha, self.p.coefficient(0, 1), self.spec.zero(), self.beta,
            self.p.coefficient(0, 0), self.gamma,
        )

    def to_json(self) -> dict[str, Any]:
        return {
            "type": self.kind,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "gamma": str(self.gamma),
            "p": format_poly(self.p),
        }

    def __str__(self) -> str:
        return f"Elementary{self.to_map()}"


Factor = Union[AffineFactor, ElementaryFactor]


@dataclass
class JungWord:
    factors: list[Factor]
    spec: FieldSpec

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    @property
    def kinds(self) -> list[str]:
        return [f.kind for f in self.factors]

    def is_alternating(self) -> bool:
        return all(a.kind != b.kind for a, b in zip(self.factors, self.factors[1:]))

    def to_json(self) -> list[dict[str, Any]]:
        return [f.to_json() for f in self.factors]

    def __str__(self) -> str:
        return " ∘ ".join(str(f) for f in self.factors) or "id"


def recompose(word: Union[JungWord, Sequence[Factor]], spec: Optional[FieldSpec] = None) -> PolyMap:
    """Compose the factors of a word back into a map."""
    factors = list(word.factors if isinstance(word, JungWord) else word)
    if spec is None:
        spec = word.spec if isinstance(word, JungWord) else factors[0].spec
    result = PolyMap.identity(spec)
    for factor in reversed(factors):
        result = compose_maps(factor.to_map(), result)
    return result


def _leading_ratio(top: PlanePoly, base: PlanePoly, k: int) -> Optional[FieldElement]:
    """c with LF(top) = c·LF(base)^k, or None."""
    lf_top = top.leading_form()
    power = base.leading_form() ** k
    exp, coeff = next(iter(power.terms.items()))
    c = lf_top.coefficient(*exp) / coeff
    if lf_top == power.scale(c):
        return c
    return None


def jung_decompose(f: PolyMap) -> JungWord:
    """Write ``f`` as a reduced alternating word of affine and elementary factors.

    Raises ``NotAnAutomorphism`` when the Jacobian is not a nonzero constant
    or a degree reduction step is impossible.
    """
    spec = f.spec
    if f.constant_jacobian() is None:
        raise NotAnAutomorphism(f"{f} does not have a nonzero constant Jacobian")
    swap = AffineFactor.swap(spec)
    y = PlanePoly.y(spec)
    prefix: list[Factor] = []
    p, q = f.p, f.q
    while max(p.degree, q.degree) > 1:
        d1, d2 = p.degree, q.degree
        if min(d1, d2) < 1:
            raise NotAnAutomorphism(f"{f}: a component became constant during reduction")
        if d1 >= d2:
            if d1 % d2:
                raise NotAnAutomorphism(f"{f}: degree {d2} does not divide {d1}")
            k = int(d1 // d2)
            c = _leading_ratio(p, q, k)
            if c is None:
                raise NotAnAutomorphism(f"{f}: leading forms are not proportional")
            p = p - (q**k).scale(c)
            prefix.append(ElementaryFactor.shear(spec, (y**k).scale(c)))
        else:
            if d2 % d1:
                raise NotAnAutomorphism(f"{f}: degree {d1} does not divide {d2}")
            k = int(d2 // d1)
            c = _leading_ratio(q, p, k)
            if c is None:
                raise NotAnAutomorphism(f"{f}: leading forms are not proportional")
            q = q - (p**k).scale(c)
            prefix.extend([swap, ElementaryFactor.shear(spec, (y**k).scale(c)), swap])
        logger.debug(f"jung step: degrees ({p.degree}, {q.degree})", "JUNG")
    if min(p.degree, q.degree) < 1:
        raise NotAnAutomorphism(f"{f}: reduction ended in a degenerate affine map")
    prefix.append(AffineFactor.from_map(PolyMap(p, q, spec)))
    return reduce_word(prefix, spec)


def _merge(a: Factor, b: Factor) -> Factor:
    if isinstance(a, AffineFactor) and isinstance(b, AffineFactor):
        return a.compose(b)
    ea = a.as_elementary() if isinstance(a, AffineFactor) else a
    eb = b.as_elementary() if isinstance(b, AffineFactor) else b
    return ea.compose(eb)


def _normalize(factor: Factor) -> Factor:
    if isinstance(factor, ElementaryFactor) and factor.is_affine:
        return factor.as_affine()
    return factor


def _is_intersection(factor: Factor) -> bool:
    return isinstance(factor, AffineFactor) and factor.is_triangular


def reduce_word(factors: Sequence[Factor], spec: Optional[FieldSpec] = None) -> JungWord:
    """Normalize to an alternating word.

    Adjacent factors of one kind are merged, elementary factors of degree ≤ 1
    become affine, and triangular affine factors are absorbed into the
    elementary neighbour on the right (else on the left).
    """
    spec = spec or factors[0].spec
    word = [_normalize(f) for f in factors]
    changed = True
    while changed and len(word) > 1:
        changed = False
        merged: list[Factor] = []
        for factor in word:
            if merged and merged[-1].kind == factor.kind:
                merged[-1] = _normalize(_merge(merged[-1], factor))
                changed = True
            else:
                merged.append(factor)
        word = merged
        for i, factor in enumerate(word):
            if len(word) > 1 and _is_intersection(factor):
                if i + 1 < len(word) and isinstance(word[i + 1], ElementaryFactor):
                    word[i + 1] = _normalize(_merge(factor, word[i + 1]))
                elif i > 0 and isinstance(word[i - 1], ElementaryFactor):
                    word[i - 1] = _normalize(_merge(word[i - 1], factor))
                else:
                    continue
                del word[i]
                changed = True
                break
    return JungWord(word, spec)


@dataclass
class CyclicReduction:
    """``word`` represents conjugator ∘ f ∘ conjugator⁻¹."""

    word: JungWord
    conjugator: PolyMap
    conjugator_inverse: PolyMap
    steps: int = 0

    @property
    def length(self) -> int:
        return len(self.word)


def cyclically_reduce(word: JungWord) -> CyclicReduction:
    """Conjugate by end factors until the word cannot shrink; start with an elementary factor."""
    spec = word.spec
    factors = list(word.factors)
    conj = PolyMap.identity(spec)
    conj_inv = PolyMap.identity(spec)
    steps = 0
    while len(factors) > 1 and factors[0].kind == factors[-1].kind:
        last = factors[-1]
        # last ∘ (w₁ … w_k) ∘ last⁻¹ = (last ∘ w₁) w₂ … w_{k−1}
        factors = list(reduce_word([last] + factors[:-1], spec).factors)
        conj = compose_maps(last.to_map(), conj)
        conj_inv = compose_maps(conj_inv, last.inverse().to_map())
        steps += 1
    if len(factors) > 1 and isinstance(factors[0], AffineFactor):
        first = factors[0]
        factors = factors[1:] + [first]
        conj = compose_maps(first.inverse().to_map(), conj)
        conj_inv = compose_maps(conj_inv, first.to_map())
        steps += 1
    logger.debug(f"cyclic reduction: length {len(factors)} after {steps} steps", "JUNG")
    return CyclicReduction(JungWord(factors, spec), conj, conj_inv, steps)


def invert_factor(factor: Factor) -> Factor:
    return factor.inverse()


def invert_map(f: PolyMap) -> PolyMap:
    """The exact inverse, by reversing the Jung word and inverting each factor."""
    word = jung_decompose(f)
    inverse = recompose([invert_factor(fac) for fac in reversed(word.factors)], f.spec)
    if not compose_maps(f, inverse).is_identity():
        raise NotAnAutomorphism(f"inverse of {f} failed verification")
    return inverse


def is_automorphism(f: PolyMap) -> bool:
    try:
        jung_decompose(f)
    except NotAnAutomorphism:
        return False
    return True


def factor_from_json(data: dict[str, Any], spec: FieldSpec) -> Factor:
    from planeauto.algebra.parser import parse_poly

    kind = data.get("type")
    if kind == "affine":
        (a11, a12), (a21, a22) = data["matrix"]
        t1, t2 = data["translation"]
        return AffineFactor(*(spec.element(v) for v in (a11, a12, a21, a22, t1, t2)))
    if kind == "elementary":
        return ElementaryFactor(
            spec.element(data["alpha"]),
            parse_poly(data["p"], spec),
            spec.element(data["beta"]),
            spec.element(data["gamma"]),
        )
    raise InvalidInput(f"unknown factor type {kind!r}")
