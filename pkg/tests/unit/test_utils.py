import hashlib

import orjson
import pytest

from planeauto.utils import inputs_digest, validate_yaml_file


def test_validate_yaml_file_valid(tmp_path):
    path = tmp_path / "valid.yaml"
    path.write_text("max_iter: 80\n")
    result, message = validate_yaml_file(str(path))
    assert result is True
    assert "Successfully validated" in message


def test_validate_yaml_file_not_found(tmp_path):
    result, message = validate_yaml_file(str(tmp_path / "missing.yaml"))
    assert result is False
    assert "wasn't found" in message


def test_validate_yaml_file_invalid(tmp_path):
    path = tmp_path / "invalid.yaml"
    path.write_text("settings:\n  first_setting: value\n  second_setting: value\n    nested: x\n")
    result, message = validate_yaml_file(str(path))
    assert result is False
    assert "There was an issue while trying to read" in message


def test_inputs_digest_ignores_key_order():
    a = inputs_digest({"f": {"x": "y", "y": "x + y^3"}}, {"max_iter": 200, "tolerance": 1e-6})
    b = inputs_digest({"f": {"y": "x + y^3", "x": "y"}}, {"tolerance": 1e-6, "max_iter": 200})
    assert a == b
    assert len(a) == 64


def test_inputs_digest_value():
    payload = orjson.dumps({"inputs": {}, "parameters": {"seed": 1}}, option=orjson.OPT_SORT_KEYS)
    assert inputs_digest({}, {"seed": 1}) == hashlib.sha256(payload).hexdigest()


@pytest.mark.parametrize("parameters", [{"max_iter": 100}, {"max_iter": 200, "seed": 2}])
def test_inputs_digest_depends_on_parameters(parameters):
    assert inputs_digest({}, parameters) != inputs_digest({}, {"max_iter": 200})
