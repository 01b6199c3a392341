"""Polynomial systems whose solutions are conjugators ψ of bounded degree.

The unknowns are the coefficients of ψ₁ and ψ₂ (``a_i_j`` and ``b_i_j`` for
xⁱyʲ) and two units ``u`` and ``v``.  Coefficient matching of ψ∘f − g∘ψ gives
one equation per monomial slot and component; the Jacobian determinant of ψ
must equal u, and u·v = 1 keeps it nonzero.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional, Sequence

from planeauto.algebra.field import FieldSpec
from planeauto.algebra.multipoly import MultiPoly, PolyRing
from planeauto.algebra.plane_poly import PlanePoly
from planeauto.automorphisms.polymap import PolyMap
from planeauto.conjugacy.screen import common_spec
from planeauto.exceptions import InvalidInput, ResourceCapExceeded
from planeauto.logs import logger

Slots = dict[tuple[int, int], MultiPoly]


def monomials_up_to(degree: int) -> list[tuple[int, int]]:
    return [(i, total - i) for total in range(degree + 1) for i in range(total, -1, -1)]


def _slot_add(target: Slots, key: tuple[int, int], value: MultiPoly) -> None:
    current = target.get(key)
    total = value if current is None else current + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def _slots_mul(a: Slots, b: Slots) -> Slots:
    out: Slots = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            _slot_add(out, (i1 + i2, j1 + j2), c1 * c2)
    return out


def _slots_derivative(a: Slots, var: int) -> Slots:
    out: Slots = {}
    for (i, j), c in a.items():
        power = (i, j)[var]
        if power:
            key = (i - 1, j) if var == 0 else (i, j - 1)
            _slot_add(out, key, c.scale(power))
    return out


def _slots_sub(a: Slots, b: Slots) -> Slots:
    out = dict(a)
    for key, c in b.items():
        _slot_add(out, key, -c)
    return out


@dataclass
class ConjugacySystem:
    ring: PolyRing
    degree_cap: int
    slots: list[tuple[int, int]]
    identity_equations: list[MultiPoly]
    jacobian_equations: list[MultiPoly]
    unit_equation: MultiPoly

    @property
    def spec(self) -> FieldSpec:
        return self.ring.spec

    @property
    def monomial_count(self) -> int:
        return len(self.slots)

    @property
    def equation_count(self) -> int:
        """Two slot equations per monomial plus the unit equation."""
        return len(self.identity_equations) + 1

    @property
    def unknowns(self) -> tuple[str, ...]:
        return self.ring.names

    @property
    def equations(self) -> list[MultiPoly]:
        """The nonzero generators handed to the Gröbner engine."""
        every = self.identity_equations + self.jacobian_equations + [self.unit_equation]
        return [e for e in every if e]

    def psi_monomials(self) -> list[tuple[int, int]]:
        return monomials_up_to(self.degree_cap)

    def psi_from_point(self, point: Sequence[Any]) -> PolyMap:
        values = dict(zip(self.ring.names, point))
        spec = self.spec
        p = PlanePoly(spec, {(i, j): values[f"a_{i}_{j}"] for i, j in self.psi_monomials()})
        q = PlanePoly(spec, {(i, j): values[f"b_{i}_{j}"] for i, j in self.psi_monomials()})
        return PolyMap(p, q, spec)

    def point_for(self, psi: PolyMap) -> list[Any]:
        """The coefficient vector of a given ψ (with u its Jacobian and v = 1/u)."""
        jac = psi.constant_jacobian()
        if jac is None or psi.degree > self.degree_cap:
            raise InvalidInput(f"{psi} is not a candidate of degree ≤ {self.degree_cap}")
        values: dict[str, Any] = {}
        for i, j in self.psi_monomials():
            values[f"a_{i}_{j}"] = psi.p.coefficient(i, j)
            values[f"b_{i}_{j}"] = psi.q.coefficient(i, j)
        values["u"], values["v"] = jac, jac.inverse()
        return [self.ring.coerce(values[name]) for name in self.ring.names]

    def is_satisfied_by(self, point: Sequence[Any]) -> bool:
        return all(not e.evaluate(point) for e in self.equations)


def conjugacy_equations(
    f: PolyMap,
    g: PolyMap,
    degree_cap: int,
    unknown_cap_degree: Optional[int] = 4,
) -> ConjugacySystem:
    """Equations over the common base field for ψ with deg ψ ≤ ``degree_cap``."""
    if degree_cap < 1:
        raise InvalidInput("the degree cap must be at least 1")
    if unknown_cap_degree is not None and degree_cap > unknown_cap_degree:
        unknowns = (degree_cap + 1) * (degree_cap + 2)
        raise ResourceCapExceeded(
            f"degree cap {degree_cap} needs {unknowns} unknowns (cap: degree {unknown_cap_degree})",
            cap="unknowns",
            limit=unknown_cap_degree,
        )
    spec = common_spec(f, g)
    f, g = f.lift(spec), g.lift(spec)
    psi_monos = monomials_up_to(degree_cap)
    names = [f"a_{i}_{j}" for i, j in psi_monos] + [f"b_{i}_{j}" for i, j in psi_monos] + ["u", "v"]
    ring = PolyRing(names, spec)
    psi1: Slots = {m: ring.gen(f"a_{m[0]}_{m[1]}") for m in psi_monos}
    psi2: Slots = {m: ring.gen(f"b_{m[0]}_{m[1]}") for m in psi_monos}

    # ψ∘f: each unknown multiplies the known polynomial f₁ⁱ·f₂ʲ.
    knowns = {(i, j): f.p**i * f.q**j for i, j in psi_monos}

    def compose_left(unknown_prefix: str) -> Slots:
        out: Slots = {}
        for (i, j), known in knowns.items():
            unknown = ring.gen(f"{unknown_prefix}_{i}_{j}")
            for exp, c in known.terms.items():
                _slot_add(out, exp, unknown.scale(c))
        return out

    # g∘ψ: substitute the symbolic ψ into each component of g.
    powers1: list[Slots] = [{(0, 0): ring.one()}]
    powers2: list[Slots] = [{(0, 0): ring.one()}]
    for _ in range(g.degree):
        powers1.append(_slots_mul(powers1[-1], psi1))
        powers2.append(_slots_mul(powers2[-1], psi2))

    def compose_right(component: PlanePoly) -> Slots:
        out: Slots = {}
        for (i, j), c in component.terms.items():
            for key, value in _slots_mul(powers1[i], powers2[j]).items():
                _slot_add(out, key, value.scale(c))
        return out

    diff1 = _slots_sub(compose_left("a"), compose_right(g.p))
    diff2 = _slots_sub(compose_left("b"), compose_right(g.q))
    slots = monomials_up_to(degree_cap * max(f.degree, g.degree))
    zero = ring.zero()
    identity = [diff1.get(m, zero) for m in slots] + [diff2.get(m, zero) for m in slots]

    det = _slots_sub(
        _slots_mul(_slots_derivative(psi1, 0), _slots_derivative(psi2, 1)),
        _slots_mul(_slots_derivative(psi1, 1), _slots_derivative(psi2, 0)),
    )
    u, v = ring.gen("u"), ring.gen("v")
    jacobian = [det.get((0, 0), zero) - u]
    jacobian += [c for key, c in sorted(det.items()) if key != (0, 0)]
    unit = u * v - 1
    logger.debug(
        f"conjugacy system: {len(names)} unknowns, {len(slots)} slots, "
        f"{sum(1 for e in identity if e)} nonzero identity equations",
        "EQUATIONS",
    )
    return ConjugacySystem(ring, degree_cap, slots, identity, jacobian, unit)
