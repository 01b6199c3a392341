"""Classification and generalized Hénon normal form."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from planeauto.algebra.field import FieldElement, FieldSpec
from planeauto.algebra.plane_poly import PlanePoly, format_poly
from planeauto.algebra.radicals import solve_binomial_system
from planeauto.automorphisms.jung import (
    AffineFactor,
    CyclicReduction,
    ElementaryFactor,
    JungWord,
    cyclically_reduce,
    jung_decompose,
)
from planeauto.automorphisms.polymap import PolyMap, compose_maps
from planeauto.exceptions import (
    FieldExtensionNeeded,
    InvalidInput,
    NotLoxodromic,
    PlaneAutoError,
)
from planeauto.logs import logger


@dataclass(frozen=True)
class HenonFactor:
    """(x, y) ↦ (a·y + p(x), x) with a ≠ 0 and deg p ≥ 2."""

    a: FieldElement
    p: PlanePoly

    def __post_init__(self):
        if not self.a:
            raise InvalidInput("Hénon factor with a = 0")
        if self.p.variables() - {"x"} or self.p.degree < 2:
            raise InvalidInput(f"Hénon factor needs p(x) of degree ≥ 2, got {self.p}")

    @property
    def spec(self) -> FieldSpec:
        return self.a.spec

    @property
    def degree(self) -> int:
        return int(self.p.degree)

    @property
    def leading_coefficient(self) -> FieldElement:
        return self.p.coefficient(self.degree, 0)

    def coefficients(self) -> list[FieldElement]:
        """p's coefficients, lowest degree first."""
        return self.p.univariate_coeffs("x")

    def to_map(self) -> PolyMap:
        spec = self.spec
        return PolyMap(PlanePoly.y(spec).scale(self.a) + self.p, PlanePoly.x(spec), spec)

    def inverse_map(self) -> PolyMap:
        """(x, y) ↦ (y, (x − p(y))/a)."""
        spec = self.spec
        p_of_y = PlanePoly(spec, {(0, i): c for (i, _), c in self.p.terms.items()})
        return PolyMap(PlanePoly.y(spec), (PlanePoly.x(spec) - p_of_y).scale(self.a.inverse()), spec)

    def to_json(self) -> dict[str, Any]:
        return {"a": str(self.a), "p": format_poly(self.p)}


@dataclass
class HenonForm:
    """H = H₁ ∘ H₂ ∘ … ∘ H_k with conjugator φ: φ ∘ f ∘ φ⁻¹ = H."""

    factors: list[HenonFactor]
    conjugator: PolyMap
    conjugator_inverse: Optional[PolyMap] = None

    @property
    def spec(self) -> FieldSpec:
        return self.factors[0].spec

    @property
    def degree(self) -> int:
        return math.prod(f.degree for f in self.factors)

    @property
    def lambda1(self) -> int:
        return self.degree

    @property
    def jacobian_constant(self) -> FieldElement:
        result = self.spec.one()
        for factor in self.factors:
            result = result * (-factor.a)
        return result

    def to_map(self) -> PolyMap:
        result = PolyMap.identity(self.spec)
        for factor in reversed(self.factors):
            result = compose_maps(factor.to_map(), result)
        return result

    def inverse_map(self) -> PolyMap:
        result = PolyMap.identity(self.spec)
        for factor in self.factors:
            result = compose_maps(factor.inverse_map(), result)
        return result

    @classmethod
    def from_factors(cls, factors: Sequence[tuple[Any, PlanePoly]], spec: Optional[FieldSpec] = None) -> HenonForm:
        """Hénon form with identity conjugator from (a, p) pairs."""
        built = []
        for a, p in factors:
            field_spec = spec or p.spec
            built.append(HenonFactor(field_spec.element(a) if not isinstance(a, FieldElement) else a, p))
        identity = PolyMap.identity(built[0].spec)
        return cls(built, identity, identity)

    def to_json(self) -> dict[str, Any]:
        return {
            "field": self.spec.to_json(),
            "factors": [f.to_json() for f in self.factors],
            "conjugator": self.conjugator.to_json(),
            "degree": self.degree,
            "jacobian": str(self.jacobian_constant),
        }


@dataclass
class ClassificationResult:
    kind: str
    lambda1: int
    reduced_word: JungWord
    conjugator: PolyMap
    henon: Optional[HenonForm] = None

    @property
    def is_loxodromic(self) -> bool:
        return self.kind == "loxodromic"

    def to_json(self) -> dict[str, Any]:
        witness: dict[str, Any]
        if self.henon is not None:
            witness = {"henon_form": self.henon.to_json()}
        else:
            subgroup = self.reduced_word.factors[0].kind if len(self.reduced_word) else "affine"
            witness = {
                "subgroup": subgroup,
                "conjugator": self.conjugator.to_json(),
                "word": self.reduced_word.to_json(),
            }
        return {"class": self.kind, "lambda1": self.lambda1, "witness": witness}


def _henon_from_reduction(f: PolyMap, reduction: CyclicReduction) -> HenonForm:
    """Convert a cyclically reduced word E₁A₁…E_kA_k into Hénon factors."""
    spec = f.spec
    word = reduction.word.factors
    elementaries = [w for w in word if isinstance(w, ElementaryFactor)]
    affines = [w for w in word if isinstance(w, AffineFactor)]
    k = len(elementaries)
    bruhat = [a.bruhat() for a in affines]
    conj, conj_inv = reduction.conjugator, reduction.conjugator_inverse

    # Conjugate by the last right Bruhat piece so each J_i = T2_{i−1} E_i T1_i.
    last_t2 = bruhat[-1][1]
    conj = compose_maps(last_t2.to_map(), conj)
    conj_inv = compose_maps(conj_inv, last_t2.inverse().to_map())
    pieces = []
    for i in range(k):
        left = bruhat[i - 1][1]
        right = bruhat[i][0]
        pieces.append(left.compose(elementaries[i]).compose(right))

    # J_i = D_i ∘ (α_i x + P_i(y), y) with D_i = (x, β_i y + γ_i).
    alphas = [piece.alpha for piece in pieces]
    polys = [piece.p for piece in pieces]
    betas = [piece.beta for piece in pieces]
    gammas = [piece.gamma for piece in pieces]
    # σ ∘ D_i = (β_i x + γ_i, y) ∘ σ is absorbed into J'_{i−1}.
    for i in range(k - 1, 0, -1):
        polys[i - 1] = polys[i - 1] + alphas[i - 1] * gammas[i]
        alphas[i - 1] = alphas[i - 1] * betas[i]
    # Conjugating by D_1⁻¹ moves D_1 behind the last factor.
    d1 = ElementaryFactor(spec.one(), PlanePoly.zero(spec), betas[0], gammas[0])
    conj = compose_maps(d1.inverse().to_map(), conj)
    conj_inv = compose_maps(conj_inv, d1.to_map())
    polys[k - 1] = polys[k - 1] + alphas[k - 1] * gammas[0]
    alphas[k - 1] = alphas[k - 1] * betas[0]

    factors = []
    for a, p in zip(alphas, polys):
        p_of_x = PlanePoly(spec, {(j, 0): c for (_, j), c in p.terms.items()})
        factors.append(HenonFactor(a, p_of_x))
    return HenonForm(factors, conj, conj_inv)


def _monic(form: HenonForm) -> HenonForm:
    """Conjugate by diagonal maps so every pᵢ is monic.

    With Lᵢ = (uᵢx, uᵢ₊₁y) between factors the leading coefficients become
    cᵢ·uᵢ^{dᵢ}/uᵢ₋₁, giving the binomial system uᵢ^{dᵢ}·uᵢ₋₁⁻¹ = 1/cᵢ.
    """
    spec = form.spec
    k = len(form.factors)
    rows = []
    for i, factor in enumerate(form.factors):
        exps = [0] * k
        exps[i] += factor.degree
        exps[(i - 1) % k] -= 1
        rows.append((exps, factor.leading_coefficient.inverse()))
    solution = solve_binomial_system(rows, k, spec, allow_extension=False)
    if solution is None:
        raise FieldExtensionNeeded(f"no diagonal normalization of {form.factors} over {spec}")
    u = solution.values
    factors = []
    for i, factor in enumerate(form.factors):
        ui, uprev, unext = u[i], u[(i - 1) % k], u[(i + 1) % k]
        scaled = PlanePoly(
            spec, {(j, 0): c * ui**j / uprev for (j, _), c in factor.p.terms.items()}
        )
        factors.append(HenonFactor(factor.a * unext / uprev, scaled))
    # H' = L₀⁻¹ ∘ H ∘ L₀ with L₀ = (u_k x, u_1 y) in 1-based indices.
    x, y = PlanePoly.x(spec), PlanePoly.y(spec)
    l0 = PolyMap(x.scale(u[k - 1]), y.scale(u[0]), spec)
    l0_inv = PolyMap(x.scale(u[k - 1].inverse()), y.scale(u[0].inverse()), spec)
    conj = compose_maps(l0_inv, form.conjugator)
    conj_inv = compose_maps(form.conjugator_inverse, l0) if form.conjugator_inverse else None
    return HenonForm(factors, conj, conj_inv)


def _verify(f: PolyMap, form: HenonForm) -> None:
    if compose_maps(form.conjugator, f) != compose_maps(form.to_map(), form.conjugator):
        raise PlaneAutoError("Hénon normal form failed exact verification")


def classify(f: PolyMap, monic: bool = False) -> ClassificationResult:
    """Elliptic (λ₁ = 1) or loxodromic (λ₁ = Π deg pᵢ ≥ 2) with a witness."""
    word = jung_decompose(f)
    reduction = cyclically_reduce(word)
    if reduction.length <= 1:
        logger.debug(f"{f} is elliptic", "CLASSIFY")
        return ClassificationResult("elliptic", 1, reduction.word, reduction.conjugator)
    form = _henon_from_reduction(f, reduction)
    if monic:
        form = _monic(form)
    _verify(f, form)
    logger.debug(f"{f} is loxodromic with λ₁ = {form.degree}", "CLASSIFY")
    return ClassificationResult("loxodromic", form.degree, reduction.word, form.conjugator, form)


def henon_normal_form(f: PolyMap, monic: bool = False) -> HenonForm:
    result = classify(f, monic=monic)
    if result.henon is None:
        raise NotLoxodromic(f"{f} is elliptic; it has no Hénon normal form")
    return result.henon


def as_henon(h: Any) -> HenonForm:
    """Accept a HenonForm or a loxodromic PolyMap."""
    if isinstance(h, HenonForm):
        return h
    if isinstance(h, PolyMap):
        return henon_normal_form(h)
    raise TypeError(f"expected a HenonForm or PolyMap, got {type(h).__name__}")
