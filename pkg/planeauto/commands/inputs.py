"""Reading command inputs: map files and comma separated flag values."""
from __future__ import annotations

from pathlib import Path
from typing import Optional

import orjson

from planeauto.automorphisms.polymap import PolyMap
from planeauto.config import Config
from planeauto.exceptions import InvalidInput
from planeauto.json_utils.utilities import schema_errors, validate_json


def load_map(path: str, config: Optional[Config] = None) -> PolyMap:
    """Parse a map JSON file after checking it against the map schema."""
    try:
        data = orjson.loads(Path(path).read_bytes())
    except FileNotFoundError:
        raise InvalidInput(f"map file {path} not found")
    except orjson.JSONDecodeError as e:
        raise InvalidInput(f"map file {path} is not valid JSON: {e}")
    if not validate_json(data, config, "map"):
        raise InvalidInput(f"map file {path}: " + "; ".join(schema_errors(data, "map")))
    return PolyMap.from_json(data)


def parse_point(text: str) -> tuple[complex, complex]:
    """``x_re,x_im,y_re,y_im`` as a complex pair."""
    try:
        parts = [float(p) for p in text.split(",")]
    except ValueError:
        raise InvalidInput(f"point {text!r} must be four comma separated numbers")
    if len(parts) != 4:
        raise InvalidInput(f"point {text!r} must be four comma separated numbers")
    return complex(parts[0], parts[1]), complex(parts[2], parts[3])


def parse_grid(text: str) -> tuple[int, int]:
    try:
        nx, ny = (int(p) for p in text.split(","))
    except ValueError:
        raise InvalidInput(f"grid {text!r} must be nx,ny")
    return nx, ny
