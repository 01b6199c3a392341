"""
Test cases for the config class, which handles the run configuration settings
for planeauto.
"""
import os
from unittest import mock

import click
import pytest
import yaml
from pydantic import ValidationError

from planeauto.config import Config, ConfigBuilder
from planeauto.configurator import check_settings_file, create_config
from planeauto.core.configuration import deep_update


def test_initial_values(config: Config):
    """
    Test if the initial values of the config class attributes are set correctly.
    """
    assert config.debug_mode is False
    assert config.seed is None
    assert config.output_format == "json"
    assert config.max_iter == 200
    assert config.escape_radius is None
    assert config.tolerance == 1e-6
    assert config.raster_cap == 8192
    assert config.unknown_cap_degree == 4


def test_term_cap(config: Config):
    config.memory_cap_mb = 2
    assert config.term_cap == 2048


def test_parameter_groups(config: Config):
    assert config.numeric_parameters()["max_iter"] == 200
    assert config.exact_caps()["eliminant_degree_cap"] == 64
    assert config.periodic_options() == {
        "grouping_tolerance": 1e-7,
        "newton_steps": 50,
        "aberth_threshold": 200,
        "degree_cap": 1000,
    }


def test_validators(config: Config):
    with pytest.raises(ValidationError):
        config.tolerance = 0.0
    with pytest.raises(ValidationError):
        config.output_format = "png"


@mock.patch.dict(
    os.environ,
    {
        "PLANEAUTO_SEED": "7",
        "PLANEAUTO_MAX_ITER": "50",
        "PLANEAUTO_TOLERANCE": "1e-4",
        "PLANEAUTO_CAP_MB": "64",
        "PLANEAUTO_DISABLED_COMMAND_CATEGORIES": "planeauto.commands.dynamics, planeauto.commands.conjugacy",
    },
)
def test_environment_overrides(settings_file):
    config = ConfigBuilder.build_config_from_env(settings_file)
    assert config.seed == 7
    assert config.max_iter == 50
    assert config.tolerance == 1e-4
    assert config.memory_cap_mb == 64
    assert config.disabled_command_categories == [
        "planeauto.commands.dynamics",
        "planeauto.commands.conjugacy",
    ]


def test_unparsable_environment_is_ignored(monkeypatch, settings_file):
    monkeypatch.setenv("PLANEAUTO_MAX_ITER", "many")
    assert ConfigBuilder.build_config_from_env(settings_file).max_iter == 200


def test_settings_file(tmp_path, monkeypatch):
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.dump({"max_iter": 80, "raster_cap": 16}))
    config = ConfigBuilder.build_config_from_env(str(path))
    assert config.max_iter == 80
    assert config.raster_cap == 16
    assert config.settings_file == str(path)
    # The environment wins over the file.
    monkeypatch.setenv("PLANEAUTO_MAX_ITER", "30")
    assert ConfigBuilder.build_config_from_env(str(path)).max_iter == 30


def test_unknown_settings_are_rejected(tmp_path):
    path = tmp_path / "settings.yaml"
    path.write_text(yaml.dump({"max_iterations": 80}))
    with pytest.raises(ValidationError):
        ConfigBuilder.build_config_from_env(str(path))


def test_make_settings(tmp_path):
    path = tmp_path / "planeauto_settings.yaml"
    written = ConfigBuilder.make_settings(str(path))
    loaded = yaml.safe_load(path.read_text())
    assert loaded == written
    assert loaded["max_iter"] == 200
    assert "report_dir" not in loaded
    assert ConfigBuilder.build_config_from_env(str(path)).max_iter == 200


def test_check_settings_file(tmp_path):
    path = tmp_path / "broken.yaml"
    path.write_text("max_iter: [1,\n")
    with pytest.raises(click.UsageError):
        check_settings_file(str(path))
    with pytest.raises(click.UsageError):
        check_settings_file(str(tmp_path / "missing.yaml"))


def test_create_config_overrides(config: Config):
    create_config(config, "green", True, 3, None, None, 25, 10.0)
    assert config.debug_mode
    assert config.seed == 3
    assert config.max_iter == 25
    assert config.escape_radius == 10.0


def test_raster_formats_need_raster_and_out(config: Config):
    with pytest.raises(click.UsageError):
        create_config(config, "classify", False, None, "pgm", "x.pgm", None, None)
    with pytest.raises(click.UsageError):
        create_config(config, "raster", False, None, "csv", None, None, None)
    create_config(config, "raster", False, None, "pgm", "x.pgm", None, None)
    assert config.output_format == "pgm"


@pytest.mark.parametrize("max_iter, escape_radius", [(0, None), (None, -1.0), (None, 0.0)])
def test_bad_numeric_overrides(config: Config, max_iter, escape_radius):
    with pytest.raises(click.UsageError):
        create_config(config, "green", False, None, None, None, max_iter, escape_radius)


def test_deep_update_leaves_the_original_alone():
    original = {"caps": {"exponent": 10, "terms": 5}, "seed": None}
    merged = deep_update(original, {"caps": {"terms": 7}, "seed": 3})
    assert merged == {"caps": {"exponent": 10, "terms": 7}, "seed": 3}
    assert original["caps"]["terms"] == 5
