"""Diagonal conjugators ψ = (αx, βy) and ψ = (αy, βx).

Coefficient matching in ψ∘f = g∘ψ turns every monomial of f into one
binomial equation in α and β, so the whole ansatz is a binomial system.
"""
from __future__ import annotations

from typing import Optional, Union

from planeauto.algebra.field import FieldElement
from planeauto.algebra.plane_poly import PlanePoly
from planeauto.algebra.radicals import solve_binomial_system
from planeauto.automorphisms.henon import HenonForm
from planeauto.automorphisms.polymap import PolyMap
from planeauto.conjugacy.schema import ConjugacyCertificate, certify
from planeauto.conjugacy.screen import common_spec
from planeauto.logs import logger

Row = tuple[list[int], FieldElement]
MapLike = Union[PolyMap, HenonForm]


def _as_map(h: MapLike) -> PolyMap:
    return h.to_map() if isinstance(h, HenonForm) else h


def ansatz_rows(f: PolyMap, g: PolyMap, swap: bool) -> Optional[list[Row]]:
    """Binomial rows in (α, β), or None when the monomial supports disagree.

    Without swap: α·f₁ᵢⱼ = g₁ᵢⱼ·αⁱβʲ and β·f₂ᵢⱼ = g₂ᵢⱼ·αⁱβʲ.
    With swap the monomial xⁱyʲ of ψ∘f meets xʲyⁱ of g and the components
    trade places.
    """
    rows: list[Row] = []
    left = (f.q, f.p) if swap else (f.p, f.q)
    for k, (fk, gk) in enumerate(zip(left, (g.p, g.q))):
        target = {(j, i) if swap else (i, j): c for (i, j), c in gk.terms.items()}
        if set(target) != set(fk.terms):
            return None
        for (i, j), c in fk.terms.items():
            exps = [j, i] if swap else [i, j]
            exps[k] -= 1
            rows.append((exps, c / target[(i, j)]))
    return rows


def _diagonal_map(alpha: FieldElement, beta: FieldElement, swap: bool) -> PolyMap:
    spec = alpha.spec
    x, y = PlanePoly.x(spec), PlanePoly.y(spec)
    if swap:
        return PolyMap(y.scale(alpha), x.scale(beta), spec)
    return PolyMap(x.scale(alpha), y.scale(beta), spec)


def solve_diagonal_ansatz(
    f: MapLike, g: MapLike, allow_extension: bool = True
) -> Optional[ConjugacyCertificate]:
    """A verified diagonal or swapped-diagonal conjugator, possibly over a radical extension."""
    f, g = _as_map(f), _as_map(g)
    spec = common_spec(f, g)
    f, g = f.lift(spec), g.lift(spec)
    for swap in (False, True):
        rows = ansatz_rows(f, g, swap)
        if rows is None:
            continue
        solution = solve_binomial_system(rows, 2, spec, allow_extension=allow_extension)
        if solution is None:
            continue
        alpha, beta = solution.values
        psi = _diagonal_map(alpha, beta, swap)
        certificate = certify(psi, f, g)
        if certificate is not None:
            if solution.extension is not None:
                logger.debug(
                    f"diagonal conjugator over t^{solution.extension.spec.degree} = "
                    f"{solution.extension.radicand}",
                    "ANSATZ",
                )
            return certificate
    return None
