"""End-to-end runs of the command line through ``dispatch``."""
import orjson
import pytest

from planeauto.cli import dispatch


@pytest.fixture
def out(tmp_path):
    return str(tmp_path / "report.json")


def read_report(path: str) -> dict:
    with open(path, "rb") as f:
        return orjson.loads(f.read())


def test_bound(out):
    code, report = dispatch(["bound", "--df", "2", "--dg", "2", "--out", out])
    assert code == 0
    data = read_report(out)
    assert data == report.to_json()
    assert data["outputs"] == {"theorem_a_bound": str(2**115), "bits": 116}
    assert data["status"] == "ok"
    assert len(data["inputs_digest"]) == 64


def test_bound_from_map_files(map_file, out):
    f = map_file("y", "x + y^3", name="f.json")
    g = map_file("y", "x + y^2", name="g.json")
    code, _ = dispatch(["bound", "-f", f, "-g", g, "--out", out])
    assert code == 0
    assert read_report(out)["outputs"]["theorem_a_bound"] == str(2**57 * 6**29)


def test_report_goes_to_stdout_without_out(capsys):
    code, report = dispatch(["bound", "--df", "3", "--dg", "2"])
    assert code == 0
    assert orjson.loads(capsys.readouterr().out) == report.to_json()


def test_report_dir(report_dir):
    code, report = dispatch(["bound", "--df", "2", "--dg", "2"])
    assert code == 0
    path = report_dir / f"bound-{report.inputs_digest[:12]}.json"
    assert read_report(str(path))["exit_code"] == 0


def test_classify(map_file, out):
    code, _ = dispatch(["classify", "-i", map_file("y", "x + y^3"), "--out", out])
    assert code == 0
    outputs = read_report(out)["outputs"]
    assert outputs["classification"]["class"] == "loxodromic"
    assert outputs["classification"]["lambda1"] == 3
    assert outputs["degree_sequence"] == [3, 9, 27]


def test_digest_is_stable(map_file, tmp_path):
    first, second = str(tmp_path / "a.json"), str(tmp_path / "b.json")
    path = map_file("y", "x + y^3")
    dispatch(["classify", "-i", path, "--out", first])
    dispatch(["classify", "-i", path, "--out", second])
    assert read_report(first)["inputs_digest"] == read_report(second)["inputs_digest"]


def test_decompose_and_invert(map_file, out):
    path = map_file("y", "x + y^2")
    assert dispatch(["decompose", "-i", path, "--out", out])[0] == 0
    outputs = read_report(out)["outputs"]
    assert outputs["length"] == 2
    assert outputs["verified"] is True
    assert dispatch(["invert", "-i", path, "--out", out])[0] == 0
    outputs = read_report(out)["outputs"]
    assert outputs["inverse"] == {"field": "Q", "x": "-x^2 + y", "y": "x"}
    assert outputs["verified"] is True


def test_normal_form(map_file, out):
    code, _ = dispatch(["normal-form", "-i", map_file("y", "x + y^3"), "--out", out])
    assert code == 0
    outputs = read_report(out)["outputs"]
    assert outputs["lambda1"] == 3
    assert outputs["jacobian"] == "-1"


def test_green(map_file, out):
    path = map_file("y", "x + y^3")
    code, _ = dispatch(["green", "-i", path, "--point", "0,0,0,0", "--out", out])
    assert code == 0
    outputs = read_report(out)["outputs"]
    assert outputs["mode"] == "gplus"
    assert outputs["estimate"]["value"] == 0.0
    assert outputs["estimate"]["escaped"] is False


def test_green_with_small_escape_radius(map_file, out):
    path = map_file("y", "x + y^3")
    code, report = dispatch(
        ["green", "-i", path, "--point", "1,0,1,0", "--escape-radius", "0.5", "--out", out]
    )
    assert code == 1
    assert report.status == "error"
    assert read_report(out)["error"]["error"] == "InvalidEscapeRadius"


def test_raster_json(map_file, out):
    path = map_file("y", "x + y^3")
    code, _ = dispatch(["raster", "-i", path, "--grid", "3,3", "--out", out])
    assert code == 0
    outputs = read_report(out)["outputs"]
    assert outputs["resolution"] == [3, 3]
    assert outputs["format"] == "json"
    assert len(outputs["values"]) == 3
    # The center cell is the fixed point at the origin.
    assert outputs["values"][1][1] == 0.0


def test_raster_pgm(map_file, tmp_path, report_dir):
    image = str(tmp_path / "slice.pgm")
    path = map_file("y", "x + y^3")
    code, report = dispatch(
        ["raster", "-i", path, "--grid", "4,3", "--format", "pgm", "--out", image]
    )
    assert code == 0
    assert report.outputs["raster"] == image
    lines = (tmp_path / "slice.pgm").read_text().splitlines()
    assert lines[0] == "P2"
    assert lines[2] == "4 3"


def test_raster_cap(map_file, out):
    path = map_file("y", "x + y^3")
    code, _ = dispatch(["raster", "-i", path, "--grid", "9000,1", "--out", out])
    assert code == 3
    data = read_report(out)
    assert data["status"] == "cap-exceeded"
    assert data["caps_hit"] == [{"cap": "raster", "limit": 8192}]


def test_periodic(map_file, out):
    path = map_file("y + x^2 - 1", "x")
    code, _ = dispatch(["periodic", "-i", path, "--out", out])
    assert code == 0
    outputs = read_report(out)["outputs"]
    assert outputs["counts"] == {"1": 2}
    assert {o["type"] for o in outputs["orbits"]} == {"saddle"}


def test_example(out):
    code, _ = dispatch(["example", "--out", out])
    assert code == 0
    outputs = read_report(out)["outputs"]
    assert outputs["alpha"] == ["0", "1/2"]
    assert outputs["alpha_power_check"] is True
    conjugacy = outputs["conjugacy"]
    assert conjugacy["outcome"] == "conjugate"
    assert conjugacy["method"] == "diagonal-ansatz"
    assert conjugacy["certificates"][0]["field"] == {"minpoly": [-2, 0, 1], "root": 0}


def test_conjugate_refuted(map_file, out):
    f = map_file("y", "x + y^3", name="f.json")
    g = map_file("2*y", "x + y^3", name="g.json")
    code, report = dispatch(["conjugate", "-f", f, "-g", g, "--out", out])
    assert code == 0
    assert report.status == "refuted"
    assert read_report(out)["outputs"]["conjugacy"]["refutation"]["reason"] == "jacobian-mismatch"


def test_conjugate_over_extension_field(map_file, out):
    field = {"minpoly": [-2, 0, 1], "root": 0}
    f = map_file("y", "x + y^3", field=field, name="f.json")
    g = map_file("y", "x + 2*y^3", field=field, name="g.json")
    code, report = dispatch(["conjugate", "-f", f, "-g", g, "--out", out])
    assert code == 0
    assert report.status == "ok"


@pytest.mark.parametrize(
    "argv",
    [
        ["classify"],
        ["conjugate", "-f", "{f}", "-g", "{f}", "--tol", "0"],
        ["classify", "-i", "{f}", "--format", "pgm", "--out", "x.pgm"],
        ["raster", "-i", "{f}", "--format", "csv"],
        ["green", "-i", "{f}", "--point", "0,0,0,0", "--max-iter", "0"],
        ["periodic", "-i", "{f}", "--max-period", "7"],
        ["nonexistent"],
    ],
)
def test_usage_errors(map_file, argv):
    path = map_file("y", "x + y^3")
    code, report = dispatch([a.format(f=path) for a in argv])
    assert code == 2
    assert report is None


@pytest.mark.parametrize("x, y", [("x +", "y"), ("x $ 1", "y")])
def test_invalid_input(map_file, out, x, y):
    code, _ = dispatch(["classify", "-i", map_file(x, y), "--out", out])
    assert code == 2
    data = read_report(out)
    assert data["status"] == "invalid-input"
    assert data["error"]["error"] == "PolySyntaxError"


def test_malformed_map_file(tmp_path, out):
    path = tmp_path / "broken.json"
    path.write_text('{"x": "y"}')
    code, _ = dispatch(["classify", "-i", str(path), "--out", out])
    assert code == 2
    assert read_report(out)["status"] == "invalid-input"


def test_not_an_automorphism(map_file, out):
    code, report = dispatch(["classify", "-i", map_file("x^2", "y"), "--out", out])
    assert code == 1
    assert report.status == "error"
    assert read_report(out)["error"]["error"] == "NotAnAutomorphism"


def test_make_settings(tmp_path):
    path = tmp_path / "planeauto_settings.yaml"
    code, report = dispatch(["make-settings", str(path)])
    assert code == 0
    assert report is None
    assert "max_iter: 200" in path.read_text()


def test_seed_is_applied(mocker, out):
    seed = mocker.patch("planeauto.main.random.seed")
    code, report = dispatch(["bound", "--df", "2", "--dg", "2", "--seed", "9", "--out", out])
    assert code == 0
    seed.assert_called_once_with(9)
    assert report.arguments == {"f": None, "g": None, "df": 2, "dg": 2}
