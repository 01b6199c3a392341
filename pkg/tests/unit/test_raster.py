import numpy as np
import pytest

from planeauto.automorphisms.henon import HenonForm
from planeauto.dynamics.green import green_max
from planeauto.dynamics.raster import Chart, raster_slice, write_csv, write_pgm
from planeauto.exceptions import InvalidInput, ResourceCapExceeded
from tests.utils import read_pgm


def test_parse_chart():
    chart = Chart.parse("0, 0, 1, 0, 0, 1j, 1.5")
    assert chart.v == (0j, 1j)
    assert chart.radius == 1.5
    assert chart.to_json()["v"] == [[0.0, 0.0], [0.0, 1.0]]


@pytest.mark.parametrize("text", ["0,0,1,0,0,1", "0,0,1,0,0,1,0", "0,0,a,0,0,1,1", "0,0,1,0,0,1,-2"])
def test_bad_charts(text):
    with pytest.raises(InvalidInput):
        Chart.parse(text)


def test_chart_orientation():
    x, y = Chart.standard(2.0).points(3, 2)
    assert x.shape == (2, 3)
    assert x[0].tolist() == [-2, 0, 2]
    # Row 0 is the top edge.
    assert y[:, 0].tolist() == [2, -2]


def test_single_cell_is_the_origin(cubic_henon: HenonForm):
    grid = raster_slice(cubic_henon, Chart.standard(), (1, 1))
    assert grid.tolist() == [[0.0]]


def test_raster_matches_point_evaluation(cubic_henon: HenonForm):
    chart = Chart.standard(3.0)
    grid = raster_slice(cubic_henon, chart, (5, 4), "gmax")
    x, y = chart.points(5, 4)
    for i in range(4):
        for j in range(5):
            expected = green_max(cubic_henon, (x[i, j], y[i, j])).value
            assert grid[i, j] == pytest.approx(expected, rel=1e-12)


def test_gmax_dominates(quadratic_henon: HenonForm):
    chart = Chart.standard(2.5)
    plus = raster_slice(quadratic_henon, chart, (6, 6), "gplus")
    minus = raster_slice(quadratic_henon, chart, (6, 6), "gminus")
    both = raster_slice(quadratic_henon, chart, (6, 6), "gmax")
    assert np.array_equal(both, np.maximum(plus, minus))
    assert (both >= 0).all()


def test_raster_cap(cubic_henon: HenonForm):
    with pytest.raises(ResourceCapExceeded) as e:
        raster_slice(cubic_henon, Chart.standard(), (10, 10), cap=5)
    assert e.value.cap == "raster"
    assert e.value.limit == 5


@pytest.mark.parametrize("mode, resolution", [("gsum", (2, 2)), ("gmax", (0, 3))])
def test_bad_raster_requests(cubic_henon: HenonForm, mode, resolution):
    with pytest.raises(InvalidInput):
        raster_slice(cubic_henon, Chart.standard(), resolution, mode)


def test_pgm_round_trip(cubic_henon: HenonForm, tmp_path):
    grid = raster_slice(cubic_henon, Chart.standard(3.0), (7, 5))
    path = tmp_path / "slice.pgm"
    g_max = write_pgm(grid, path)
    assert g_max == float(grid.max())
    assert path.read_text().splitlines()[:4] == ["P2", f"# G_max = {g_max!r}", "7 5", "65535"]
    read_max, levels = read_pgm(path)
    assert read_max == g_max
    assert levels.shape == (5, 7)
    assert levels.max() == 65535
    assert levels.min() == 0


def test_flat_grid_writes_zeros(tmp_path):
    path = tmp_path / "flat.pgm"
    assert write_pgm(np.zeros((2, 2)), path) == 0.0
    assert read_pgm(path)[1].tolist() == [[0, 0], [0, 0]]


def test_csv(tmp_path):
    grid = np.array([[0.0, 0.25], [1.0 / 3.0, 2.0]])
    path = tmp_path / "slice.csv"
    write_csv(grid, path)
    assert np.array_equal(np.loadtxt(path, delimiter=","), grid)

