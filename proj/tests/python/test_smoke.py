"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import kinstab


def test_surface_basics():
    assert kinstab.validate_surface([1, 3, 3, 4], 9) == 2
    assert kinstab.hyperplane_square([1, 3, 3, 4], 9) == Fraction(1, 4)
    assert kinstab.antican_square([1, 3, 3, 4], 9) == Fraction(1)
    assert kinstab.h0_count([1, 3, 3, 4], 9, 3) == 3
    assert kinstab.normalize_quotient(8, (3, 7)) == (8, (1, 5))


def test_surface_validation_raises():
    with pytest.raises(kinstab.EngineError):
        kinstab.validate_surface([3, 1, 3, 4], 9)
    with pytest.raises(kinstab.EngineError):
        kinstab.validate_surface([1, 1, 1, 1], 5)


def test_exact_linear_algebra():
    assert kinstab.solve([["-2/3"]], ["-1"]) == [Fraction(3, 2)]
    x = kinstab.solve([[Fraction(-2, 3), 0], [0, Fraction(-2, 3)]], ["-1/6", "-1/6"])
    assert x == [Fraction(1, 4), Fraction(1, 4)]
    assert kinstab.is_negative_definite([["-4"]])
    assert not kinstab.is_negative_definite([["0"]])
    assert kinstab.is_negative_definite([["-3/4", "0"], ["0", "-2/3"]])


def test_beta_presets():
    report = kinstab.run_preset("s9")
    assert kinstab.beta(report) == Fraction(-1, 18)
    assert report["verdict"] == "NotKSemistable"
    assert report["beta"]["tau"] == "3/2"
    assert report["beta"]["integral"] == "5/9"
    assert report["beta"]["breakpoints"] == ["0", "1/6", "3/2"]

    boundary = kinstab.run_preset("fam-11nm", n=3, m=3, allow_boundary=True)
    assert kinstab.beta(boundary) == 0
    assert boundary["verdict"] == "Inconclusive"


def test_alpha_presets():
    report = kinstab.run_preset("s27")
    assert Fraction(report["alpha"]["lct_ub"]) == Fraction(5, 9)
    assert kinstab.delta_upper_bound(report) == Fraction(5, 6)
    assert report["verdict"] == "NotKSemistable"

    s45 = kinstab.run_preset("s45")
    assert Fraction(s45["alpha"]["lct_ub"]) == Fraction(8, 15)


def test_scenario_round_trip():
    scenario = kinstab.export_preset("fam-3n4", n=1)
    direct = kinstab.run_preset("fam-3n4", n=1)
    import json

    rerun = kinstab.run_scenario(json.dumps(scenario))
    assert rerun == direct


def test_reports_are_deterministic():
    a = kinstab.run_preset("fam-11nm", n=1, m=4)
    b = kinstab.run_preset("fam-11nm", n=1, m=4)
    assert a == b


def test_sweep_rows():
    rows = kinstab.sweep("fam-11nm", n=(0, 4), m=(0, 4))
    assert len(rows) == 10
    assert all(Fraction(r["beta"]) < 0 for r in rows)
    assert all(r["verdict"] == "NotKSemistable" for r in rows)

    lct_rows = kinstab.sweep("fam-6n9", n=(0, 3), m=0)
    assert [Fraction(r["lct_ub"]) for r in lct_rows] == [
        Fraction(n + 2, 2 * n + 3) for n in range(4)
    ]


def test_bad_preset_raises():
    with pytest.raises(kinstab.EngineError):
        kinstab.run_preset("fam-11nm", n=4, m=1)
    with pytest.raises(kinstab.EngineError):
        kinstab.run_preset("unknown")
