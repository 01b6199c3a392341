"""Commands for conjugacy search, the completeness bound and the worked example."""
from __future__ import annotations

from fractions import Fraction
from typing import Optional

from planeauto.algebra.groebner import GroebnerCaps
from planeauto.command_decorator import command
from planeauto.commands.inputs import load_map
from planeauto.config import Config
from planeauto.conjugacy import (
    ConjugacyReport,
    build_example,
    find_conjugacy,
    theorem_a_bound,
)
from planeauto.exceptions import InvalidInput, PlaneAutoError
from planeauto.json_utils.utilities import validate_json
from planeauto.models import CommandResult

COMMAND_CATEGORY = "conjugacy"
COMMAND_CATEGORY_TITLE = "Conjugacy"

OUTCOME_STATUS = {"conjugate": "ok", "refuted": "refuted", "undecided": "undecided"}


def groebner_caps(config: Config) -> GroebnerCaps:
    return GroebnerCaps(
        max_pairs=config.groebner_max_pairs,
        max_coefficient_digits=config.groebner_max_coefficient_digits,
    )


def _checked(report: ConjugacyReport, config: Config) -> dict:
    """The report JSON, with certificates and refutations checked against their schemas."""
    data = report.to_json()
    for certificate in data["certificates"]:
        if not validate_json(certificate, config, "certificate"):
            raise PlaneAutoError("certificate failed schema validation")
    if data["refutation"] is not None and not validate_json(data["refutation"], config, "refutation"):
        raise PlaneAutoError("refutation failed schema validation")
    return data


def _run(config: Config, f, g, degree_cap: int, max_period: int, tol: Optional[float]) -> ConjugacyReport:
    return find_conjugacy(
        f,
        g,
        degree_cap=degree_cap,
        max_period=max_period,
        tol=tol if tol is not None else config.tolerance,
        caps=groebner_caps(config),
        unknown_cap_degree=config.unknown_cap_degree,
        eliminant_degree_cap=config.eliminant_degree_cap,
        **config.periodic_options(),
    )


@command(
    "conjugate",
    "Search for ψ of bounded degree with ψ∘f = g∘ψ, or refute",
    {
        "f": {"type": "path", "description": "Map JSON file for f", "required": True},
        "g": {"type": "path", "description": "Map JSON file for g", "required": True},
        "degree_cap": {"type": "integer", "description": "Largest degree of ψ", "default": 1},
        "max_period": {"type": "integer", "description": "Periods screened by multipliers", "default": 1},
        "tol": {"type": "number", "description": "Multiplier comparison tolerance"},
    },
)
def conjugate(
    config: Config,
    f: str,
    g: str,
    degree_cap: int = 1,
    max_period: int = 1,
    tol: Optional[float] = None,
) -> CommandResult:
    map_f, map_g = load_map(f, config), load_map(g, config)
    report = _run(config, map_f, map_g, degree_cap, max_period, tol)
    outputs = {"conjugacy": _checked(report, config)}
    inputs = {
        "f": map_f.to_json(),
        "g": map_g.to_json(),
        "degree_cap": degree_cap,
        "max_period": max_period,
    }
    parameters = config.numeric_parameters() | config.exact_caps()
    if tol is not None:
        parameters["tolerance"] = tol
    return CommandResult(outputs, inputs, parameters, OUTCOME_STATUS[report.outcome])


@command(
    "bound",
    "Print the degree bound beyond which conjugators never need to be searched",
    {
        "f": {"type": "path", "description": "Map JSON file for f"},
        "g": {"type": "path", "description": "Map JSON file for g"},
        "df": {"type": "integer", "description": "Degree of f"},
        "dg": {"type": "integer", "description": "Degree of g"},
    },
)
def bound(
    config: Config,
    f: Optional[str] = None,
    g: Optional[str] = None,
    df: Optional[int] = None,
    dg: Optional[int] = None,
) -> CommandResult:
    if df is None and f is not None:
        df = load_map(f, config).degree
    if dg is None and g is not None:
        dg = load_map(g, config).degree
    if df is None or dg is None:
        raise InvalidInput("bound needs the degrees of f and g (-f/-g or --df/--dg)")
    value = theorem_a_bound(df, dg)
    outputs = {"theorem_a_bound": str(value), "bits": value.bit_length()}
    return CommandResult(outputs, inputs={"df": df, "dg": dg})


@command(
    "example",
    "Build f = (y, x + y^(m+1)) and g = (y, x + d·y^(m+1)) and certify their conjugacy",
    {
        "m": {"type": "integer", "description": "Exponent m ≥ 1", "default": 2},
        "d": {"type": "integer", "description": "Nonzero integer coefficient", "default": 2},
        "max_period": {"type": "integer", "description": "Periods screened by multipliers", "default": 1},
    },
)
def example(config: Config, m: int = 2, d: int = 2, max_period: int = 1) -> CommandResult:
    f, g = build_example(m, d)
    report = _run(config, f, g, 1, max_period, None)
    outputs = {"f": f.to_json(), "g": g.to_json(), "conjugacy": _checked(report, config)}
    if report.certificate is not None:
        alpha = report.certificate.psi.p.coefficient(1, 0)
        outputs["alpha"] = alpha.to_json()
        outputs["alpha_power_check"] = bool(alpha) and alpha**m == Fraction(1, d)
    inputs = {"m": m, "d": d, "max_period": max_period}
    parameters = config.numeric_parameters() | config.exact_caps()
    return CommandResult(outputs, inputs, parameters, OUTCOME_STATUS[report.outcome])
