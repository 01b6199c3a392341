"""Commands for Green functions, raster slices and periodic points."""
from __future__ import annotations

import os
from typing import Optional

import numpy as np

from planeauto.command_decorator import command
from planeauto.commands.inputs import load_map, parse_grid, parse_point
from planeauto.config import Config
from planeauto.dynamics import (
    Chart,
    filtration_bounds,
    green_max,
    green_minus,
    green_plus,
    periodic_points,
    raster_slice,
    write_csv,
    write_pgm,
)
from planeauto.dynamics.green import check_escape_radius, resolve_form
from planeauto.exceptions import InvalidInput
from planeauto.models import CommandResult

COMMAND_CATEGORY = "dynamics"
COMMAND_CATEGORY_TITLE = "Numerical dynamics"

GREEN_FUNCTIONS = {"gplus": green_plus, "gminus": green_minus, "gmax": green_max}


def _pair(z: complex) -> list[float]:
    return [z.real, z.imag]


@command(
    "green",
    "Evaluate G+, G- or max(G+, G-) at a point",
    {
        "input": {"type": "path", "description": "Map JSON file", "required": True},
        "point": {"type": "string", "description": "x_re,x_im,y_re,y_im", "required": True},
        "mode": {"type": "string", "description": "gplus, gminus or gmax", "default": "gplus"},
    },
)
def green(config: Config, input: str, point: str, mode: str = "gplus") -> CommandResult:
    if mode not in GREEN_FUNCTIONS:
        raise InvalidInput(f"unknown mode {mode!r}")
    f = load_map(input, config)
    z = parse_point(point)
    form = resolve_form(f)
    bounds = filtration_bounds(form)
    radius = check_escape_radius(bounds, config.escape_radius)
    estimate = GREEN_FUNCTIONS[mode](f, z, config.max_iter, radius)
    outputs = {
        "mode": mode,
        "estimate": estimate.to_json(),
        "escape_radius": radius,
        "filtration": bounds.to_json(),
    }
    inputs = {"map": f.to_json(), "point": [_pair(z[0]), _pair(z[1])], "mode": mode}
    return CommandResult(outputs, inputs=inputs, parameters=config.numeric_parameters())


@command(
    "raster",
    "Sample a Green function on a real 2D slice and write PGM, CSV or JSON",
    {
        "input": {"type": "path", "description": "Map JSON file", "required": True},
        "grid": {"type": "string", "description": "nx,ny", "default": "64,64"},
        "chart": {"type": "string", "description": "ox,oy,ux,uy,vx,vy,r"},
        "mode": {"type": "string", "description": "gplus, gminus or gmax", "default": "gmax"},
        "out": {"type": "path", "description": "Raster file for pgm and csv output"},
    },
)
def raster(
    config: Config,
    input: str,
    grid: str = "64,64",
    chart: Optional[str] = None,
    mode: str = "gmax",
    out: Optional[str] = None,
) -> CommandResult:
    f = load_map(input, config)
    resolution = parse_grid(grid)
    slice_chart = Chart.parse(chart) if chart else Chart.standard()
    values = raster_slice(
        f, slice_chart, resolution, mode, config.max_iter, config.escape_radius, config.raster_cap
    )
    outputs = {
        "mode": mode,
        "resolution": list(resolution),
        "chart": slice_chart.to_json(),
        "format": config.output_format,
    }
    if config.output_format == "pgm":
        outputs["g_max"] = write_pgm(values, out)
        outputs["raster"] = os.path.abspath(out)
    elif config.output_format == "csv":
        write_csv(values, out)
        outputs["g_max"] = float(np.max(values))
        outputs["raster"] = os.path.abspath(out)
    else:
        outputs["g_max"] = float(np.max(values))
        outputs["values"] = values.tolist()
    inputs = {"map": f.to_json(), "grid": list(resolution), "chart": slice_chart.to_json(), "mode": mode}
    return CommandResult(outputs, inputs=inputs, parameters=config.numeric_parameters())


@command(
    "periodic",
    "Find periodic orbits of minimal period up to max_period with their multipliers",
    {
        "input": {"type": "path", "description": "Map JSON file", "required": True},
        "max_period": {"type": "integer", "description": "Largest period, at most 6", "default": 1},
    },
)
def periodic(config: Config, input: str, max_period: int = 1) -> CommandResult:
    f = load_map(input, config)
    if not 1 <= max_period <= 6:
        raise InvalidInput(f"max period must be between 1 and 6, got {max_period}")
    options = config.periodic_options()
    orbits = []
    for n in range(1, max_period + 1):
        orbits.extend(o for o in periodic_points(f, n, **options) if o.period == n)
    outputs = {
        "orbits": [o.to_json() for o in orbits],
        "counts": {str(n): sum(1 for o in orbits if o.period == n) for n in range(1, max_period + 1)},
    }
    inputs = {"map": f.to_json(), "max_period": max_period}
    return CommandResult(outputs, inputs=inputs, parameters=config.numeric_parameters())
