import math
import os
import pathlib

import pytest

import curvlab

DATA = pathlib.Path(os.environ.get("CURVLAB_DATA_DIR", pathlib.Path(__file__).resolve().parents[2] / "data"))


def test_catalog_lists_builtin_geometries():
    names = curvlab.geometry_names()
    assert "taub-nut" in names and "kerr" in names
    info = curvlab.describe("kerr")
    assert info["coordinates"] == ["r", "theta", "phi", "t"]
    assert "gck" in info["expected"]


def test_kerr_default_suite_passes():
    report, code = curvlab.verify("kerr", samples=100)
    assert code == 0
    assert report["schema"] == "curvlab-report/1"
    assert report["summary"]["fail"] == 0
    assert {r["claim_ref"] for r in report["records"]} >= {"ricci_flat", "gck"}


def test_kahler_on_kerr_fails():
    report, code = curvlab.verify("kerr", checks=["kahler"], samples=100)
    assert code == 1
    assert any(r["verdict"] == "fail" for r in report["records"])


def test_results_do_not_depend_on_workers():
    one, _ = curvlab.verify("taub-nut", samples=80, workers=1)
    four, _ = curvlab.verify("taub-nut", samples=80, workers=4)
    assert one == four


def test_geometry_file():
    report, code = curvlab.check_file(DATA / "flat_r4.json", samples=50)
    assert code == 0
    assert report["geometry"] == "flat-r4"


def test_expressions_and_errors():
    value = curvlab.evaluate("r^2 - 2*M*r", ["r", "theta", "phi", "t"], [3.0, 0.0, 0.0, 0.0], {"M": 1.0})
    assert math.isclose(value, 3.0)
    with pytest.raises(curvlab.ParseError) as err:
        curvlab.evaluate("si n(theta)", ["r", "theta", "phi", "t"], [1.0, 1.0, 0.0, 0.0])
    assert err.value.column == 1
    with pytest.raises(ValueError):
        curvlab.verify("no-such-geometry")
