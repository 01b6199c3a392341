"""Commands for the exact side: classification, decomposition, normal forms, inverses."""
from __future__ import annotations

from planeauto.automorphisms import (
    classify as classify_map,
    compose_maps,
    degree_sequence,
    henon_normal_form,
    invert_map,
    jung_decompose,
    recompose,
)
from planeauto.command_decorator import command
from planeauto.commands.inputs import load_map
from planeauto.config import Config
from planeauto.models import CommandResult

COMMAND_CATEGORY = "algebra"
COMMAND_CATEGORY_TITLE = "Exact algebra"

DEGREE_SEQUENCE_LENGTH = 3

INPUT_PARAMETER = {
    "type": "path",
    "description": "Map JSON file",
    "required": True,
}


@command(
    "classify",
    "Decide elliptic or loxodromic and report the dynamical degree",
    {"input": INPUT_PARAMETER},
)
def classify(config: Config, input: str) -> CommandResult:
    f = load_map(input, config)
    result = classify_map(f)
    outputs = {"classification": result.to_json()}
    outputs["degree_sequence"] = degree_sequence(f, DEGREE_SEQUENCE_LENGTH)
    return CommandResult(outputs, inputs={"map": f.to_json()})


@command(
    "decompose",
    "Write a map as a reduced alternating word of affine and elementary factors",
    {"input": INPUT_PARAMETER},
)
def decompose(config: Config, input: str) -> CommandResult:
    f = load_map(input, config)
    word = jung_decompose(f)
    outputs = {
        "word": word.to_json(),
        "length": len(word),
        "verified": recompose(word, f.spec) == f,
    }
    return CommandResult(outputs, inputs={"map": f.to_json()})


@command(
    "normal-form",
    "Conjugate a loxodromic map to a composition of generalized Hénon maps",
    {
        "input": INPUT_PARAMETER,
        "monic": {
            "type": "boolean",
            "description": "Normalize leading coefficients to 1",
            "default": False,
        },
    },
)
def normal_form(config: Config, input: str, monic: bool = False) -> CommandResult:
    f = load_map(input, config)
    form = henon_normal_form(f, monic=monic)
    outputs = {
        "henon_form": form.to_json(),
        "lambda1": form.lambda1,
        "jacobian": str(form.jacobian_constant),
    }
    return CommandResult(outputs, inputs={"map": f.to_json(), "monic": monic})


@command(
    "invert",
    "Compute the exact inverse of an automorphism",
    {"input": INPUT_PARAMETER},
)
def invert(config: Config, input: str) -> CommandResult:
    f = load_map(input, config)
    inverse = invert_map(f)
    outputs = {
        "inverse": inverse.to_json(),
        "verified": compose_maps(inverse, f).is_identity(),
    }
    return CommandResult(outputs, inputs={"map": f.to_json()})
