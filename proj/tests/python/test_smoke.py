import math

import pytest

import orlicz


def test_zeta_basel():
    assert orlicz.zeta(2.0) == pytest.approx(math.pi**2 / 6, rel=1e-12)


def test_log_power_bump_at_e():
    phi = orlicz.YoungFunction.log_power(2.0)
    assert phi(math.e) == pytest.approx(math.e, rel=1e-12)
    assert phi(1.0) == 0.0
    assert phi.inverse(0.0) == 0.0


def test_luxemburg_matches_l2():
    f = [0.3, 1.7, 2.2, 0.9]
    w = [0.25, 0.25, 0.25, 0.25]
    space = orlicz.DiscreteMeasureSpace(w)
    lux = orlicz.luxemburg_norm(f, space, orlicz.YoungFunction.power(2.0))
    l2 = orlicz.lp_norm(f, space, 2.0)
    assert lux == pytest.approx(l2, rel=1e-9)


def test_cutoff_normalisation():
    cs = orlicz.CutoffSequence(1.0, 2.0, 10)
    assert cs.c == pytest.approx(3.0 / math.pi**2, rel=1e-12)
    assert cs.radius(1) == 1.0
    with pytest.raises(ValueError):
        orlicz.CutoffSequence(1.0, 1.0, 10)


def test_induction_thresholds():
    th = orlicz.induction_threshold(2.0, 1.5, 1.0)
    assert th.closed_form == pytest.approx(46.86466709725828, rel=1e-12)
    assert th.sharper <= th.closed_form


def test_superradius_formula():
    v = orlicz.superradius_formula(0.5, 1.5, 0.01)
    assert v == pytest.approx(0.1118033988749895, rel=1e-12)


def test_degenerate_data_error_is_value_error():
    with pytest.raises(orlicz.DegenerateDataError):
        orlicz.DiscreteMeasureSpace([0.0, 0.0])
    assert issubclass(orlicz.DegenerateDataError, ValueError)


def test_run_json_volume():
    res = orlicz.run_json(
        "volume",
        {"profile": "euclidean", "grid_n": 64, "r_min": 0.2, "r_max": 0.4,
         "r_count": 3},
    )
    assert res["schema_version"] == "1"
    assert res["command"] == "volume"
    assert res["route"] == "lattice"
    assert len(res["rows"]) == 3
    for row in res["rows"]:
        assert row["ratio"] == pytest.approx(1.0, abs=0.1)
