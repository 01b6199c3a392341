from pathlib import Path
from typing import Any, Union

import numpy as np

from planeauto.algebra.field import RATIONALS, FieldSpec
from planeauto.algebra.parser import parse_poly
from planeauto.automorphisms.henon import HenonForm


def henon(*factors: tuple[Any, str], spec: FieldSpec = RATIONALS) -> HenonForm:
    """A Hénon form with identity conjugator from (a, "p(x)") pairs."""
    return HenonForm.from_factors([(a, parse_poly(p, spec)) for a, p in factors], spec)


def read_pgm(path: Union[str, Path]) -> tuple[float, np.ndarray]:
    """G_max and the quantized levels of a raster written by ``write_pgm``."""
    lines = Path(path).read_text().splitlines()
    assert lines[0] == "P2"
    g_max = float(lines[1].split("=", 1)[1])
    nx, ny = (int(v) for v in lines[2].split())
    levels = np.array([[int(v) for v in line.split()] for line in lines[4 : 4 + ny]], dtype=np.int64)
    return g_max, levels.reshape(ny, nx)
