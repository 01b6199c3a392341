"""Raster slices of Green functions over real 2-grids in complex 2-planes."""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Optional, Union

import numpy as np

from planeauto.automorphisms.henon import HenonForm
from planeauto.automorphisms.polymap import PolyMap
from planeauto.dynamics.filtration import filtration_bounds
from planeauto.dynamics.green import green_field, resolve_form
from planeauto.exceptions import InvalidInput, ResourceCapExceeded
from planeauto.logs import logger

MODES = ("gplus", "gminus", "gmax")
PGM_MAXVAL = 65535
# Cells evaluated per kernel call.
CHUNK_CELLS = 1 << 16


@dataclass(frozen=True)
class Chart:
    """origin + s·u + t·v for real s, t in [−radius, radius]."""

    origin: tuple[complex, complex]
    u: tuple[complex, complex]
    v: tuple[complex, complex]
    radius: float

    @classmethod
    def parse(cls, text: str) -> Chart:
        """Parse ``ox,oy,ux,uy,vx,vy,r``; the first six accept Python complex literals."""
        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 7:
            raise InvalidInput(f"chart needs 7 comma-separated values, got {len(parts)}")
        try:
            ox, oy, ux, uy, vx, vy = (complex(p.replace(" ", "")) for p in parts[:6])
            radius = float(parts[6])
        except ValueError as e:
            raise InvalidInput(f"bad chart {text!r}: {e}")
        if not radius > 0:
            raise InvalidInput("chart radius must be positive")
        return cls((ox, oy), (ux, uy), (vx, vy), radius)

    @classmethod
    def standard(cls, radius: float = 2.0) -> Chart:
        """The real (Re x, Re y) plane through the origin."""
        return cls((0j, 0j), (1 + 0j, 0j), (0j, 1 + 0j), radius)

    def points(self, nx: int, ny: int) -> tuple[np.ndarray, np.ndarray]:
        """Row-major (ny, nx) arrays of x and y; row 0 is t = +radius."""
        s = np.linspace(-self.radius, self.radius, nx) if nx > 1 else np.zeros(1)
        t = np.linspace(self.radius, -self.radius, ny) if ny > 1 else np.zeros(1)
        ss, tt = np.meshgrid(s, t)
        x = self.origin[0] + ss * self.u[0] + tt * self.v[0]
        y = self.origin[1] + ss * self.u[1] + tt * self.v[1]
        return x, y

    def to_json(self) -> dict[str, Any]:
        pair = lambda z: [[z[0].real, z[0].imag], [z[1].real, z[1].imag]]  # noqa: E731
        return {
            "origin": pair(self.origin),
            "u": pair(self.u),
            "v": pair(self.v),
            "radius": self.radius,
        }


def raster_slice(
    h: Union[HenonForm, PolyMap],
    chart: Chart,
    resolution: tuple[int, int],
    mode: str = "gmax",
    max_iter: int = 200,
    escape_radius: Optional[float] = None,
    cap: int = 8192,
) -> np.ndarray:
    """Green values on an (ny, nx) grid; cells are independent and deterministic."""
    nx, ny = resolution
    if mode not in MODES:
        raise InvalidInput(f"unknown raster mode {mode!r}")
    if nx < 1 or ny < 1:
        raise InvalidInput(f"resolution must be positive, got {nx}x{ny}")
    if nx > cap or ny > cap:
        raise ResourceCapExceeded(f"resolution {nx}x{ny} exceeds {cap}x{cap}", cap="raster", limit=cap)
    form = resolve_form(h)
    bounds = filtration_bounds(form)
    x, y = chart.points(nx, ny)
    if isinstance(h, PolyMap):
        x, y = form.conjugator.eval_complex_array(x, y)
    x, y = x.ravel(), y.ravel()
    grid = np.empty(x.size)
    directions = {"gplus": ("plus",), "gminus": ("minus",), "gmax": ("plus", "minus")}[mode]
    logger.debug(f"raster {nx}x{ny} mode={mode} R0={bounds.radius:.6g}", "RASTER")
    for start in range(0, x.size, CHUNK_CELLS):
        stop = min(start + CHUNK_CELLS, x.size)
        values = [
            green_field(form, x[start:stop], y[start:stop], d, max_iter, escape_radius, bounds).values
            for d in directions
        ]
        grid[start:stop] = np.maximum.reduce(values) if len(values) > 1 else values[0]
    return grid.reshape(ny, nx)


def write_pgm(grid: np.ndarray, path: Union[str, Path]) -> float:
    """Write an ASCII "P2" image quantized from [0, G_max]; returns G_max."""
    g_max = float(np.max(grid)) if grid.size else 0.0
    if g_max > 0 and math.isfinite(g_max):
        levels = np.rint(np.clip(grid / g_max, 0.0, 1.0) * PGM_MAXVAL).astype(np.int64)
    else:
        levels = np.zeros(grid.shape, dtype=np.int64)
    ny, nx = grid.shape
    lines = ["P2", f"# G_max = {g_max!r}", f"{nx} {ny}", str(PGM_MAXVAL)]
    lines.extend(" ".join(str(v) for v in row) for row in levels)
    Path(path).write_text("\n".join(lines) + "\n")
    return g_max


def write_csv(grid: np.ndarray, path: Union[str, Path]) -> None:
    np.savetxt(path, grid, delimiter=",", fmt="%.17g")

