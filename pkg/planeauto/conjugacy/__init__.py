"""Conjugacy search between loxodromic automorphisms."""
from planeauto.conjugacy.ansatz import solve_diagonal_ansatz
from planeauto.conjugacy.bounds import theorem_a_bound
from planeauto.conjugacy.centralizer import centralizer_torsion, dedup_modulo_centralizer
from planeauto.conjugacy.equations import ConjugacySystem, conjugacy_equations
from planeauto.conjugacy.schema import (
    ConjugacyCertificate,
    Refutation,
    RefutationReason,
    certify,
)
from planeauto.conjugacy.screen import ScreenPass, screen_invariants
from planeauto.conjugacy.solver import (
    BoundedSearch,
    ConjugacyReport,
    build_example,
    find_conjugacy,
    solve_bounded_degree,
)

__all__ = [
    "BoundedSearch",
    "ConjugacyCertificate",
    "ConjugacyReport",
    "ConjugacySystem",
    "Refutation",
    "RefutationReason",
    "ScreenPass",
    "build_example",
    "centralizer_torsion",
    "certify",
    "conjugacy_equations",
    "dedup_modulo_centralizer",
    "find_conjugacy",
    "screen_invariants",
    "solve_bounded_degree",
    "solve_diagonal_ansatz",
    "theorem_a_bound",
]
