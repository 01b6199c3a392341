"""Invariant screen run before any conjugator search."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from planeauto.algebra.field import FieldSpec
from planeauto.automorphisms.henon import HenonForm, classify
from planeauto.automorphisms.polymap import PolyMap
from planeauto.conjugacy.schema import Refutation, RefutationReason
from planeauto.dynamics.periodic import compare_spectra, multiplier_spectrum
from planeauto.exceptions import NotConjugacyPair, SpecMismatch
from planeauto.logs import logger


@dataclass
class ScreenPass:
    """All screened invariants agree."""

    lambda1: int
    jacobian: str
    spectrum_size: int = 0
    max_gap: float = 0.0
    checks: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        return {
            "lambda1": self.lambda1,
            "jacobian": self.jacobian,
            "spectrum_size": self.spectrum_size,
            "max_gap": self.max_gap,
            "checks": self.checks,
        }


def common_spec(f: PolyMap, g: PolyMap) -> FieldSpec:
    if f.spec.same_field(g.spec):
        return f.spec
    if f.spec.is_rationals:
        return g.spec
    if g.spec.is_rationals:
        return f.spec
    raise SpecMismatch(f"maps over unrelated fields {f.spec} and {g.spec}")


def _loxodromic(f: PolyMap, name: str) -> HenonForm:
    result = classify(f)
    if result.henon is None:
        raise NotConjugacyPair(f"{name} = {f} is elliptic")
    return result.henon


def screen_invariants(
    f: PolyMap,
    g: PolyMap,
    max_period: int = 1,
    tol: float = 1e-6,
    **options: Any,
) -> Union[ScreenPass, Refutation]:
    """λ₁ (exact), constant Jacobian (exact), then multiplier spectra up to ``tol``."""
    spec = common_spec(f, g)
    f, g = f.lift(spec), g.lift(spec)
    hf, hg = _loxodromic(f, "f"), _loxodromic(g, "g")
    if hf.degree != hg.degree:
        return Refutation(RefutationReason.LAMBDA1_MISMATCH, {"f": hf.degree, "g": hg.degree})
    jf, jg = f.constant_jacobian(), g.constant_jacobian()
    if jf != jg:
        return Refutation(RefutationReason.JACOBIAN_MISMATCH, {"f": str(jf), "g": str(jg)})
    result = ScreenPass(lambda1=hf.degree, jacobian=str(jf), checks=["lambda1", "jacobian"])
    if max_period >= 1:
        spectrum_f = multiplier_spectrum(hf, max_period, **options)
        spectrum_g = multiplier_spectrum(hg, max_period, **options)
        comparison = compare_spectra(spectrum_f, spectrum_g, tol)
        if not comparison.matches:
            logger.debug(f"multiplier spectra differ: {comparison.sizes}", "SCREEN")
            return Refutation(
                RefutationReason.MULTIPLIER_MISMATCH,
                {"tolerance": tol, "max_period": max_period, **comparison.to_json()},
            )
        result.spectrum_size = len(spectrum_f)
        result.max_gap = comparison.max_gap
        result.checks.append("multipliers")
    return result
