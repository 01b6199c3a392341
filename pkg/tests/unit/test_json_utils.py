import orjson
import pytest

from planeauto.json_utils.utilities import dump_json, load_schema, schema_errors, validate_json


@pytest.fixture
def report() -> dict:
    return {
        "command": {"name": "bound", "arguments": {"df": 2, "dg": 2}},
        "inputs_digest": "0" * 64,
        "status": "ok",
        "exit_code": 0,
        "outputs": {"theorem_a_bound": str(2**115), "bits": 116},
        "parameters": {},
        "caps_hit": [],
        "error": None,
        "timing": {"started": "2024-01-01T00:00:00+00:00", "seconds": 0.01},
    }


def test_valid_report(report, config):
    assert validate_json(report, config)
    assert schema_errors(report, "run_report") == []


def test_invalid_report(report, config):
    report["exit_code"] = 7
    del report["timing"]
    assert not validate_json(report, config)
    errors = schema_errors(report, "run_report")
    assert len(errors) == 2
    assert any(e.startswith("exit_code:") for e in errors)
    assert any(e.startswith("<root>:") and "timing" in e for e in errors)


@pytest.mark.parametrize("name", ["map", "certificate", "refutation", "run_report"])
def test_schemas_load(name):
    assert load_schema(name)["$schema"].startswith("http://json-schema.org/draft-07")


def test_map_schema():
    assert schema_errors({"field": "Q", "x": "y", "y": "x + y^3"}, "map") == []
    assert schema_errors({"x": "y"}, "map")


def test_dump_json_is_canonical():
    payload = dump_json({"b": 1, "a": [1, 2]})
    assert payload == b'{\n  "a": [\n    1,\n    2\n  ],\n  "b": 1\n}\n'
    assert orjson.loads(payload) == {"a": [1, 2], "b": 1}
