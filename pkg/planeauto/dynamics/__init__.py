"""Floating-point dynamics of Hénon words: Green functions, rasters and periodic orbits."""
from planeauto.dynamics.filtration import FiltrationBounds, filtration_bounds
from planeauto.dynamics.green import (
    GreenEstimate,
    green_max,
    green_minus,
    green_plus,
    in_k,
    in_k_minus,
    in_k_plus,
    pull_back_point,
)
from planeauto.dynamics.periodic import (
    PeriodicOrbit,
    classify_multipliers,
    compare_spectra,
    multiplier_spectrum,
    periodic_points,
)
from planeauto.dynamics.raster import Chart, raster_slice, write_csv, write_pgm

__all__ = [
    "Chart",
    "FiltrationBounds",
    "GreenEstimate",
    "PeriodicOrbit",
    "classify_multipliers",
    "compare_spectra",
    "filtration_bounds",
    "green_max",
    "green_minus",
    "green_plus",
    "in_k",
    "in_k_minus",
    "in_k_plus",
    "multiplier_spectrum",
    "periodic_points",
    "pull_back_point",
    "raster_slice",
    "write_csv",
    "write_pgm",
]
