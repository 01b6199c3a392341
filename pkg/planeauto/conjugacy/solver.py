"""Bounded-degree conjugacy search and the screen → ansatz → Gröbner pipeline."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Union

from planeauto.algebra.groebner import GroebnerCaps, GroebnerStats, ResidualSystem, rational_points
from planeauto.automorphisms.polymap import PolyMap
from planeauto.conjugacy.ansatz import solve_diagonal_ansatz
from planeauto.conjugacy.bounds import theorem_a_bound
from planeauto.conjugacy.centralizer import dedup_modulo_centralizer
from planeauto.conjugacy.equations import conjugacy_equations
from planeauto.conjugacy.schema import ConjugacyCertificate, Refutation, RefutationReason, certify
from planeauto.conjugacy.screen import ScreenPass, common_spec, screen_invariants
from planeauto.exceptions import FieldExtensionNeeded, InvalidInput
from planeauto.logs import logger


@dataclass
class BoundedSearch:
    degree_cap: int
    certificates: list[ConjugacyCertificate] = field(default_factory=list)
    residuals: list[ResidualSystem] = field(default_factory=list)
    refutation: Optional[Refutation] = None
    stats: list[GroebnerStats] = field(default_factory=list)

    @property
    def certificate(self) -> Optional[ConjugacyCertificate]:
        return self.certificates[0] if self.certificates else None

    @property
    def decided(self) -> bool:
        return bool(self.certificates) or self.refutation is not None

    def to_json(self) -> dict[str, Any]:
        return {
            "degree_cap": self.degree_cap,
            "certificates": [c.to_json() for c in self.certificates],
            "residual_systems": [r.dict() for r in self.residuals],
            "refutation": self.refutation.to_json() if self.refutation else None,
            "groebner": [s.dict() for s in self.stats],
        }


def solve_bounded_degree(
    f: PolyMap,
    g: PolyMap,
    degree_cap: int,
    caps: Optional[GroebnerCaps] = None,
    unknown_cap_degree: Optional[int] = 4,
    eliminant_degree_cap: int = 64,
) -> BoundedSearch:
    """Every base-field ψ with deg ψ ≤ ``degree_cap`` and ψ∘f = g∘ψ, each verified.

    A trivial ideal refutes conjugacy in this degree range only. Branches
    needing a field extension come back as residual systems.
    """
    system = conjugacy_equations(f, g, degree_cap, unknown_cap_degree)
    search = rational_points(system.equations, caps, eliminant_degree_cap)
    outcome = BoundedSearch(degree_cap, residuals=search.residuals, stats=search.stats)
    if search.trivial:
        outcome.refutation = Refutation(
            RefutationReason.EXHAUSTED_DEGREE_CAP, {"degree_cap": degree_cap}
        )
        return outcome
    spec = system.spec
    for point in search.points:
        psi = system.psi_from_point(point)
        certificate = certify(psi, f.lift(spec), g.lift(spec))
        if certificate is not None:
            outcome.certificates.append(certificate)
    if not outcome.certificates and not outcome.residuals:
        outcome.refutation = Refutation(
            RefutationReason.EXHAUSTED_DEGREE_CAP, {"degree_cap": degree_cap}
        )
    logger.debug(
        f"bounded search D={degree_cap}: {len(outcome.certificates)} certificates, "
        f"{len(outcome.residuals)} residual systems",
        "SOLVER",
    )
    return outcome


@dataclass
class ConjugacyReport:
    screen: Union[ScreenPass, Refutation]
    theorem_a_bound: int
    method: Optional[str] = None
    certificates: list[ConjugacyCertificate] = field(default_factory=list)
    search: Optional[BoundedSearch] = None

    @property
    def refutation(self) -> Optional[Refutation]:
        if isinstance(self.screen, Refutation):
            return self.screen
        return self.search.refutation if self.search else None

    @property
    def certificate(self) -> Optional[ConjugacyCertificate]:
        return self.certificates[0] if self.certificates else None

    @property
    def outcome(self) -> str:
        if self.certificates:
            return "conjugate"
        if self.refutation is not None:
            return "refuted"
        return "undecided"

    def to_json(self) -> dict[str, Any]:
        return {
            "outcome": self.outcome,
            "method": self.method,
            "screen": self.screen.to_json(),
            "certificates": [c.to_json() for c in self.certificates],
            "refutation": self.refutation.to_json() if self.refutation else None,
            "search": self.search.to_json() if self.search else None,
            "theorem_a_bound": str(self.theorem_a_bound),
        }


def find_conjugacy(
    f: PolyMap,
    g: PolyMap,
    degree_cap: int = 1,
    max_period: int = 1,
    tol: float = 1e-6,
    caps: Optional[GroebnerCaps] = None,
    unknown_cap_degree: Optional[int] = 4,
    eliminant_degree_cap: int = 64,
    **numeric_options: Any,
) -> ConjugacyReport:
    """Screen the invariants, try the diagonal ansatz, then search in bounded degree."""
    spec = common_spec(f, g)
    f, g = f.lift(spec), g.lift(spec)
    bound = theorem_a_bound(f.degree, g.degree)
    screen = screen_invariants(f, g, max_period, tol, **numeric_options)
    report = ConjugacyReport(screen=screen, theorem_a_bound=bound)
    if isinstance(screen, Refutation):
        return report
    try:
        diagonal = solve_diagonal_ansatz(f, g)
    except FieldExtensionNeeded as e:
        logger.debug(f"diagonal ansatz needs an extension: {e.message}", "SOLVER")
        diagonal = None
    if diagonal is not None and diagonal.psi.degree <= degree_cap:
        report.method = "diagonal-ansatz"
        report.certificates = dedup_modulo_centralizer([diagonal], f, degree_cap)
        return report
    search = solve_bounded_degree(f, g, degree_cap, caps, unknown_cap_degree, eliminant_degree_cap)
    report.search = search
    if search.certificates:
        report.method = "bounded-degree"
        report.certificates = dedup_modulo_centralizer(search.certificates, f, degree_cap)
    return report


def build_example(m: int, d: int) -> tuple[PolyMap, PolyMap]:
    """The pair f = (y, x + y^(m+1)) and g = (y, x + d·y^(m+1)), conjugate by (αx, αy) with αᵐ = 1/d."""
    if m < 1 or d == 0:
        raise InvalidInput(f"the example needs m ≥ 1 and d ≠ 0, got m={m}, d={d}")
    f = PolyMap.from_strings("y", f"x + y^{m + 1}")
    g = PolyMap.from_strings("y", f"x + {d}*y^{m + 1}")
    return f, g
