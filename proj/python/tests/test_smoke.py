import cmath
import os
import pathlib

import numpy as np
import pytest

import rwlab

CONFIGS = pathlib.Path(
    os.environ.get("RWLAB_CONFIG_DIR", pathlib.Path(__file__).resolve().parents[2] / "configs")
)


def test_branch():
    k = rwlab.k_at(3.0, 4.0, 1.0)
    assert abs(k - cmath.sqrt(3 + 4j)) < 1e-14
    assert abs(rwlab.k_at(9.0, 0.0, 1.0, "minus") + 3.0) < 1e-14
    assert rwlab.dimension_constants(3, 1.0)[0] == 0.0
    assert rwlab.dimension_constants(2, 1.0)[0] == -0.25
    with pytest.raises(ValueError):
        rwlab.k_at(1.0, 0.0, 1.0, "sideways")


def test_experiment_list():
    assert rwlab.experiments() == [
        "solve", "sweep-eta", "scan-resolvent", "check-geometry", "verify-identity", "radiation-probe"
    ]


def test_check_geometry():
    r = rwlab.run("check-geometry", CONFIGS / "inverted_ball_check.cfg")
    assert r["verdict"] == "FAIL"
    assert r["exit_code"] == 2
    d = {name: value for name, _, value in r["diagnostics"]}
    assert d["sign_condition_min_product"] == pytest.approx(-1.0)


def test_solve_returns_field(tmp_path):
    r = rwlab.run("solve", CONFIGS / "manufactured_solve.cfg", {"grid.n": 33}, threads=1, out=tmp_path)
    assert r["verdict"] in ("PASS", "COMPLETED")
    u = r["field"]
    assert isinstance(u, np.ndarray) and u.shape == (33, 33) and u.dtype == np.complex128
    assert np.all(np.isfinite(u))
    assert (tmp_path / "results.csv").exists()
    assert r["results"]["columns"][0]


def test_config_error():
    with pytest.raises(rwlab.ConfigError):
        rwlab.run("solve", CONFIGS / "manufactured_solve.cfg", ["grid.n=4"])
    with pytest.raises(rwlab.ConfigError):
        rwlab.run("solve", CONFIGS / "manufactured_solve.cfg", ["no.such.key=1"])
