"""Conjugacy certificates and refutations."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from planeauto.automorphisms.jung import JungWord, jung_decompose, recompose
from planeauto.automorphisms.polymap import PolyMap, compose_maps
from planeauto.exceptions import NotAnAutomorphism
from planeauto.logs import logger


class RefutationReason(str, Enum):
    LAMBDA1_MISMATCH = "lambda1-mismatch"
    JACOBIAN_MISMATCH = "jacobian-mismatch"
    MULTIPLIER_MISMATCH = "multiplier-mismatch"
    EXHAUSTED_DEGREE_CAP = "exhausted-degree-cap"


@dataclass
class Refutation:
    """Evidence that f and g are not conjugate (by ψ of bounded degree, for the cap reason)."""

    reason: RefutationReason
    data: dict[str, Any] = field(default_factory=dict)

    @property
    def numeric(self) -> bool:
        return self.reason == RefutationReason.MULTIPLIER_MISMATCH

    @property
    def sound(self) -> bool:
        """Exact refutations of polynomial conjugacy in any degree."""
        return self.reason in (RefutationReason.LAMBDA1_MISMATCH, RefutationReason.JACOBIAN_MISMATCH)

    def to_json(self) -> dict[str, Any]:
        return {"reason": self.reason.value, "data": self.data, "numeric": self.numeric}


@dataclass
class ConjugacyCertificate:
    psi: PolyMap
    checked_identity: bool
    automorphism_witness: JungWord
    dedup_class_size: int = 1

    @property
    def spec(self):
        return self.psi.spec

    def canonical_key(self) -> str:
        return f"{self.psi.spec.to_json()}|{self.psi}"

    def to_json(self) -> dict[str, Any]:
        return {
            "psi": self.psi.to_json(),
            "field": self.psi.spec.to_json(),
            "verified": self.checked_identity,
            "dedup_class_size": self.dedup_class_size,
            "witness": self.automorphism_witness.to_json(),
        }


def certify(psi: PolyMap, f: PolyMap, g: PolyMap) -> Optional[ConjugacyCertificate]:
    """A certificate when ψ∘f = g∘ψ holds exactly and ψ decomposes; otherwise None."""
    spec = psi.spec
    f, g = f.lift(spec), g.lift(spec)
    if compose_maps(psi, f) != compose_maps(g, psi):
        return None
    try:
        word = jung_decompose(psi)
    except NotAnAutomorphism as e:
        logger.warn(f"candidate conjugator {psi} is not an automorphism: {e.message}", "CONJUGACY")
        return None
    if recompose(word, spec) != psi:
        return None
    return ConjugacyCertificate(psi=psi, checked_identity=True, automorphism_witness=word)
