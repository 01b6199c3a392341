"""Run configuration: exact-arithmetic caps, numerics defaults and output settings."""
from __future__ import annotations

import contextlib
import os
from typing import Any, Optional, Union

import yaml
from pydantic import Field, validator

from planeauto.core.configuration.schema import (
    Configurable,
    SystemSettings,
    UserConfigurable,
)

SETTINGS_FILE = "planeauto_settings.yaml"
DEFAULT_MEMORY_CAP_MB = 2048
# Rough cost of one stored polynomial term, in KiB.
TERM_COST_KIB = 1


class Config(SystemSettings):
    name: str = "planeauto configuration"
    description: str = "Default configuration for the planeauto toolkit."
    ########################
    # Application Settings #
    ########################
    debug_mode: bool = False
    plain_output: bool = False
    seed: Optional[int] = None
    settings_file: str = SETTINGS_FILE
    report_dir: Optional[str] = None
    output_format: str = "json"
    disabled_command_categories: list[str] = Field(default_factory=list)

    ##########################
    # Exact arithmetic caps  #
    ##########################
    exponent_cap: int = UserConfigurable(default=10**6)
    memory_cap_mb: int = UserConfigurable(default=DEFAULT_MEMORY_CAP_MB)
    unknown_cap_degree: int = UserConfigurable(default=4)
    groebner_max_pairs: int = UserConfigurable(default=10**5)
    groebner_max_coefficient_digits: int = UserConfigurable(default=10**4)
    resultant_degree_cap: int = UserConfigurable(default=1000)
    eliminant_degree_cap: int = UserConfigurable(default=64)

    ############
    # Numerics #
    ############
    max_iter: int = UserConfigurable(default=200)
    escape_radius: Optional[float] = UserConfigurable(default=None)
    tolerance: float = UserConfigurable(default=1e-6)
    grouping_tolerance: float = UserConfigurable(default=1e-7)
    newton_steps: int = UserConfigurable(default=50)
    aberth_threshold: int = UserConfigurable(default=200)
    raster_cap: int = UserConfigurable(default=8192)

    @validator("output_format")
    def validate_output_format(cls, value: str):
        assert value in ("json", "pgm", "csv"), f"unknown output format {value}"
        return value

    @validator("tolerance", "grouping_tolerance")
    def validate_positive(cls, value: float):
        assert value > 0, "tolerances must be positive"
        return value

    @property
    def term_cap(self) -> int:
        """Largest number of stored polynomial terms allowed by ``memory_cap_mb``."""
        return self.memory_cap_mb * 1024 // TERM_COST_KIB

    def numeric_parameters(self) -> dict[str, Any]:
        return {
            "max_iter": self.max_iter,
            "escape_radius": self.escape_radius,
            "tolerance": self.tolerance,
            "grouping_tolerance": self.grouping_tolerance,
            "newton_steps": self.newton_steps,
            "aberth_threshold": self.aberth_threshold,
            "raster_cap": self.raster_cap,
        }

    def exact_caps(self) -> dict[str, Any]:
        return {
            "exponent_cap": self.exponent_cap,
            "memory_cap_mb": self.memory_cap_mb,
            "unknown_cap_degree": self.unknown_cap_degree,
            "groebner_max_pairs": self.groebner_max_pairs,
            "groebner_max_coefficient_digits": self.groebner_max_coefficient_digits,
            "resultant_degree_cap": self.resultant_degree_cap,
            "eliminant_degree_cap": self.eliminant_degree_cap,
        }

    def periodic_options(self) -> dict[str, Any]:
        """Keyword arguments for the periodic point solver."""
        return {
            "grouping_tolerance": self.grouping_tolerance,
            "newton_steps": self.newton_steps,
            "aberth_threshold": self.aberth_threshold,
            "degree_cap": self.resultant_degree_cap,
        }


class ConfigBuilder(Configurable[Config]):
    default_settings = Config()

    @classmethod
    def build_config_from_env(cls, settings_file: Optional[str] = None) -> Config:
        """Initialize the Config class from a settings file and the environment.

        Environment variables win over the settings file.
        """
        settings_file = settings_file or os.getenv(
            "PLANEAUTO_SETTINGS_FILE", SETTINGS_FILE
        )
        config_dict: dict[str, Any] = cls.load_settings_file(settings_file)
        config_dict["settings_file"] = settings_file

        env_dict: dict[str, Any] = {
            "debug_mode": os.getenv("PLANEAUTO_DEBUG", "False") == "True",
            "plain_output": os.getenv("PLAIN_OUTPUT", "False") == "True",
            "report_dir": os.getenv("PLANEAUTO_REPORT_DIR"),
            "output_format": os.getenv("PLANEAUTO_OUTPUT_FORMAT"),
        }
        env_dict["disabled_command_categories"] = _safe_split(
            os.getenv("PLANEAUTO_DISABLED_COMMAND_CATEGORIES")
        )

        with contextlib.suppress(TypeError, ValueError):
            env_dict["memory_cap_mb"] = int(os.getenv("PLANEAUTO_CAP_MB"))
        with contextlib.suppress(TypeError, ValueError):
            env_dict["seed"] = int(os.getenv("PLANEAUTO_SEED"))
        with contextlib.suppress(TypeError, ValueError):
            env_dict["max_iter"] = int(os.getenv("PLANEAUTO_MAX_ITER"))
        with contextlib.suppress(TypeError, ValueError):
            env_dict["tolerance"] = float(os.getenv("PLANEAUTO_TOLERANCE"))

        # Empty env values mean "not set", so the settings file keeps precedence.
        if not env_dict["disabled_command_categories"]:
            del env_dict["disabled_command_categories"]
        if not env_dict["debug_mode"]:
            del env_dict["debug_mode"]
        if not env_dict["plain_output"]:
            del env_dict["plain_output"]

        config_dict.update({k: v for k, v in env_dict.items() if v is not None})

        return cls.build_configuration(config_dict)

    @classmethod
    def load_settings_file(cls, settings_file: str) -> dict[str, Any]:
        """
        Loads user settings from a yaml file; a missing file yields no overrides.

        Parameters:
            settings_file(str): The path to the settings yaml file.

        Returns:
            dict
        """
        if not settings_file or not os.path.exists(settings_file):
            return {}
        with open(settings_file, encoding="utf-8") as file:
            settings = yaml.load(file, Loader=yaml.FullLoader) or {}
        return dict(settings)

    @classmethod
    def make_settings(cls, settings_file: str) -> dict[str, Any]:
        """Write the user-configurable defaults to ``settings_file``."""
        user_config = cls.get_user_config()
        with open(settings_file, "w", encoding="utf-8") as file:
            yaml.dump(user_config, file, sort_keys=True, allow_unicode=True)
        return user_config


def _safe_split(s: Union[str, None], sep: str = ",") -> list[str]:
    """Split a string by a separator. Return an empty list if the string is None."""
    if not s:
        return []
    return [part.strip() for part in s.split(sep) if part.strip()]
