from pathlib import Path
from typing import Callable

import orjson
import pytest
import yaml

from planeauto.algebra.field import FieldSpec
from planeauto.algebra.limits import limits
from planeauto.automorphisms.henon import HenonForm
from planeauto.automorphisms.polymap import PolyMap
from planeauto.config import Config, ConfigBuilder
from planeauto.logs import logger
from tests.utils import henon

ENVIRONMENT_OVERRIDES = (
    "PLANEAUTO_SETTINGS_FILE",
    "PLANEAUTO_REPORT_DIR",
    "PLANEAUTO_OUTPUT_FORMAT",
    "PLANEAUTO_SEED",
    "PLANEAUTO_MAX_ITER",
    "PLANEAUTO_TOLERANCE",
    "PLANEAUTO_CAP_MB",
    "PLANEAUTO_DISABLED_COMMAND_CATEGORIES",
    "PLANEAUTO_DEBUG",
)


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> None:
    for name in ENVIRONMENT_OVERRIDES:
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("PLANEAUTO_LOG_DIR", str(tmp_path / "logs"))


@pytest.fixture
def settings_file(tmp_path: Path) -> str:
    """A settings file in a temp directory so that it doesn't mess with existing ones"""
    settings = tmp_path / "planeauto_settings.yaml"
    settings.write_text(yaml.dump({}))
    return str(settings)


@pytest.fixture()
def config(settings_file: str) -> Config:
    config = ConfigBuilder.build_config_from_env(settings_file)

    # HACK: this is necessary to ensure PLAIN_OUTPUT takes effect
    logger.config = config
    limits.configure(config)
    yield config


@pytest.fixture
def report_dir(monkeypatch: pytest.MonkeyPatch, tmp_path: Path) -> Path:
    path = tmp_path / "reports"
    monkeypatch.setenv("PLANEAUTO_REPORT_DIR", str(path))
    return path


@pytest.fixture
def map_file(tmp_path: Path) -> Callable[..., str]:
    """Writes a map JSON file and returns its path."""

    def write(x: str, y: str, field="Q", name: str = "map.json") -> str:
        path = tmp_path / name
        path.write_bytes(orjson.dumps({"field": field, "x": x, "y": y}))
        return str(path)

    return write


@pytest.fixture
def sqrt2() -> FieldSpec:
    return FieldSpec.extension([-2, 0, 1])


@pytest.fixture
def cubic_shift() -> PolyMap:
    """(y, x + y^3): loxodromic of degree 3 with a single fixed point."""
    return PolyMap.from_strings("y", "x + y^3")


@pytest.fixture
def cubic_henon() -> HenonForm:
    """The Hénon map (y + x^3, x)."""
    return henon((1, "x^3"))


@pytest.fixture
def quadratic_henon() -> HenonForm:
    """The Hénon map (y + x^2 - 1, x) with saddle fixed points (1, 1) and (-1, -1)."""
    return henon((1, "x^2 - 1"))
