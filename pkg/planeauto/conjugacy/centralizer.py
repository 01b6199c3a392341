"""Finite parts of centralizers and deduplication of conjugators."""
from __future__ import annotations

import math
from itertools import product
from typing import Optional, Sequence

from planeauto.algebra.field import FieldSpec
from planeauto.algebra.groebner import GroebnerCaps, rational_points
from planeauto.algebra.radicals import cyclotomic_field
from planeauto.automorphisms.jung import invert_map
from planeauto.automorphisms.polymap import PolyMap, compose_maps, iterate
from planeauto.conjugacy.ansatz import _diagonal_map, ansatz_rows
from planeauto.conjugacy.equations import conjugacy_equations
from planeauto.conjugacy.schema import ConjugacyCertificate
from planeauto.logs import logger


def _torsion_order(rows) -> int:
    """Order of the solution group of Π x^e = 1, the gcd of the 2×2 minors."""
    order = 0
    for (a, _), (b, _) in product(rows, repeat=2):
        order = math.gcd(order, a[0] * b[1] - a[1] * b[0])
    return order


def _diagonal_torsion(f: PolyMap, max_order: int) -> list[PolyMap]:
    found: list[PolyMap] = []
    for swap in (False, True):
        rows = ansatz_rows(f, f, swap)
        if rows is None:
            continue
        order = _torsion_order(rows)
        if order == 0 or order > max_order:
            logger.debug(f"diagonal centralizer of order {order} skipped", "CENTRALIZER")
            continue
        spec, zeta = cyclotomic_field(order)
        if not spec.is_rationals and not f.spec.is_rationals and not spec.same_field(f.spec):
            continue
        lifted = f.lift(spec) if f.spec.is_rationals else f
        powers = [zeta**k for k in range(order)]
        for alpha, beta in product(powers, repeat=2):
            # rows are over f's field; every constant must equal the monomial value.
            if all(alpha ** e[0] * beta ** e[1] == c for e, c in rows):
                candidate = _diagonal_map(alpha, beta, swap)
                if compose_maps(candidate, lifted) == compose_maps(lifted, candidate):
                    found.append(candidate)
    return found


def centralizer_torsion(
    f: PolyMap,
    degree: int = 1,
    caps: Optional[GroebnerCaps] = None,
    max_order: int = 64,
) -> list[PolyMap]:
    """Maps c of degree ≤ ``degree`` with c∘f = f∘c.

    Base-field solutions come from the bounded-degree system; diagonal and
    swapped-diagonal ones over cyclotomic fields from the binomial ansatz.
    """
    system = conjugacy_equations(f, f, degree, unknown_cap_degree=None)
    search = rational_points(system.equations, caps)
    found = [system.psi_from_point(point) for point in search.points]
    found.extend(_diagonal_torsion(f, max_order))
    unique: list[PolyMap] = []
    for c in found:
        if not any(_same_map(c, other) for other in unique):
            unique.append(c)
    unique.sort(key=_map_key)
    logger.debug(f"{len(unique)} centralizer elements of degree ≤ {degree}", "CENTRALIZER")
    return unique


def _common(a: PolyMap, b: PolyMap) -> Optional[FieldSpec]:
    if a.spec.same_field(b.spec):
        return a.spec
    if a.spec.is_rationals:
        return b.spec
    if b.spec.is_rationals:
        return a.spec
    return None


def _same_map(a: PolyMap, b: PolyMap) -> bool:
    spec = _common(a, b)
    return spec is not None and a.lift(spec) == b.lift(spec)


def _map_key(m: PolyMap) -> str:
    return f"{m.spec.to_json()}|{m}"


def _centralizer_elements(
    f: PolyMap, degree_cap: int, torsion: Sequence[PolyMap]
) -> list[PolyMap]:
    """fᵏ∘t for |k| with deg fᵏ ≤ ``degree_cap`` and t in ``torsion``."""
    powers = [PolyMap.identity(f.spec)]
    if f.degree <= degree_cap:
        inverse = invert_map(f)
        k = 1
        while True:
            forward = iterate(f, k)
            if forward.degree > degree_cap:
                break
            powers.append(forward)
            backward = iterate(inverse, k)
            if backward.degree <= degree_cap:
                powers.append(backward)
            k += 1
    elements = []
    for power in powers:
        for t in torsion or [PolyMap.identity(f.spec)]:
            spec = _common(power, t)
            if spec is not None:
                elements.append(compose_maps(power.lift(spec), t.lift(spec)))
    return elements


def dedup_modulo_centralizer(
    certs: Sequence[ConjugacyCertificate],
    f: PolyMap,
    degree_cap: int,
    torsion: Optional[Sequence[PolyMap]] = None,
) -> list[ConjugacyCertificate]:
    """One certificate per class ψ ~ ψ∘c, c in the centralizer part found up to ``degree_cap``.

    The representative is the least certificate in canonical printer order and
    carries the summed class size.
    """
    if len(certs) < 2:
        return list(certs)
    if torsion is None:
        torsion = centralizer_torsion(f, 1)
    elements = _centralizer_elements(f, degree_cap, torsion)
    classes: list[list[ConjugacyCertificate]] = []
    for cert in certs:
        home = None
        for members in classes:
            if any(_related(cert.psi, other.psi, elements) for other in members):
                home = members
                break
        if home is None:
            classes.append([cert])
        else:
            home.append(cert)
    result = []
    for members in classes:
        rep = min(members, key=lambda c: c.canonical_key())
        result.append(
            ConjugacyCertificate(
                psi=rep.psi,
                checked_identity=rep.checked_identity,
                automorphism_witness=rep.automorphism_witness,
                dedup_class_size=sum(c.dedup_class_size for c in members),
            )
        )
    result.sort(key=lambda c: c.canonical_key())
    return result


def _related(a: PolyMap, b: PolyMap, elements: Sequence[PolyMap]) -> bool:
    if _same_map(a, b):
        return True
    for c in elements:
        for left, right in ((a, b), (b, a)):
            spec = _common(left, c)
            if spec is None:
                continue
            if _same_map(compose_maps(left.lift(spec), c.lift(spec)), right):
                return True
    return False
