"""Loading of the published JSON schemas and validation against them."""
import os.path
from functools import lru_cache
from typing import Any, Optional

import orjson
from jsonschema import Draft7Validator

from planeauto.config import Config
from planeauto.logs import logger

RUN_REPORT_SCHEMA = "run_report"


@lru_cache(maxsize=None)
def load_schema(schema_name: str) -> dict[str, Any]:
    filename = os.path.join(os.path.dirname(__file__), f"{schema_name}.json")
    with open(filename, "rb") as f:
        return orjson.loads(f.read())


def schema_errors(json_object: object, schema_name: str) -> list[str]:
    validator = Draft7Validator(load_schema(schema_name))
    errors = sorted(validator.iter_errors(json_object), key=lambda e: list(e.path))
    return [f"{'/'.join(str(p) for p in error.path) or '<root>'}: {error.message}" for error in errors]


def validate_json(
    json_object: object, config: Optional[Config] = None, schema_name: str = RUN_REPORT_SCHEMA
) -> bool:
    """
    :param json_object: the decoded JSON document
    :param schema_name: file stem of a schema in this package

    Returns:
        bool: Whether the json_object is valid or not
    """
    if errors := schema_errors(json_object, schema_name):
        for error in errors:
            logger.debug(f"JSON Validation Error: {error}")

        if config is not None and config.debug_mode:
            logger.error(f"{schema_name} document failed validation:", "JSON VALIDATION")
            for error in errors:
                logger.error(error, "JSON VALIDATION")
        return False

    logger.debug(f"The {schema_name} document is valid.")

    return True


def dump_json(data: Any) -> bytes:
    """Canonical serialization: sorted keys, two-space indentation, trailing newline."""
    return orjson.dumps(
        data, option=orjson.OPT_SORT_KEYS | orjson.OPT_INDENT_2 | orjson.OPT_APPEND_NEWLINE
    )
