"""Fitting pipeline: thresholds, equality with the transcribed forms, reports."""
import json
import math
from fractions import Fraction

import pytest

from footrule.algebra import RatPoly
from footrule.enumerators import motzkin_footrule_series, motzkin_joint_series
from footrule.formulas import (BI_DATA_CAP, UNI_DATA_CAP, NoStableFit,
                               fit_mean_formula, fit_mixed_formula,
                               fit_moment_formula, footrule_moment_data,
                               inversion_moment_data, mixed_moment_tables,
                               normal_moment, reference_formulas,
                               run_verification, window_hi)
from footrule.moments import central_moment, mean_of_poly, mixed_central_moment
from footrule.perms import brute_footrule_poly, brute_joint_poly


def _inv_variance_formula() -> RatPoly:
    n = RatPoly.variable()
    return n * (n - 1) * (2 * n + 5) / 72


def test_transcription_against_brute_force():
    """Each stored closed form reproduces exact data at a valid n."""
    ref = reference_formulas()
    spots = {"mean": (1, 5), "variance": (2, 5), "m3": (3, 5), "m4": (4, 5),
             "m5": (5, 5), "m6": (6, 6)}
    for name, (r, n) in spots.items():
        poly = brute_footrule_poly(n)
        count = math.factorial(n)
        if r == 1:
            exact = mean_of_poly(poly, count)
        else:
            exact = central_moment(poly, count, r)
        assert ref[name].evaluate(n) == exact, name
    assert ref["covariance"].evaluate(5) == mixed_central_moment(
        brute_joint_poly(5), 120, 1, 1)


def test_reference_degrees():
    ref = reference_formulas()
    assert {name: poly.degree for name, poly in ref.items()} == {
        "mean": 2, "variance": 3, "m3": 4, "m4": 6, "m5": 7, "m6": 9,
        "covariance": 3}


def test_fit_mean():
    polys = motzkin_footrule_series(8)
    fit = fit_mean_formula(footrule_moment_data(1, polys, 8))
    assert fit.formula == reference_formulas()["mean"]
    assert fit.valid_from == 1
    assert fit.statistic == "footrule" and fit.r == 1 and fit.s is None


def test_fit_variance():
    polys = motzkin_footrule_series(12)
    fit = fit_moment_formula(2, footrule_moment_data(2, polys, 12))
    assert fit.formula == reference_formulas()["variance"]
    assert fit.valid_from == 2
    # the formula provably fails just below the threshold
    data = dict(footrule_moment_data(2, polys, 12))
    assert fit.formula.evaluate(1) != data[1]


def test_fit_m3_threshold():
    polys = motzkin_footrule_series(15)
    data = footrule_moment_data(3, polys, 15)
    fit = fit_moment_formula(3, data)
    assert fit.formula == reference_formulas()["m3"]
    assert fit.valid_from == 3
    lookup = dict(data)
    assert lookup[2] == 0
    assert fit.formula.evaluate(2) == Fraction(-936, 945)  # = -104/105


def test_fit_m4_threshold():
    polys = motzkin_footrule_series(20)
    data = footrule_moment_data(4, polys, 20)
    fit = fit_moment_formula(4, data)
    assert fit.formula == reference_formulas()["m4"]
    assert fit.valid_from == 4
    lookup = dict(data)
    assert lookup[3] == Fraction(272, 27)
    assert fit.formula.evaluate(3) == Fraction(13624, 945)


def test_fitted_formula_invariant_beyond_window():
    """The fit keeps matching on fresh points past its window."""
    polys = motzkin_footrule_series(18)
    fit = fit_moment_formula(3, footrule_moment_data(3, polys, 15))
    for n, value in footrule_moment_data(3, polys, 18):
        if n >= fit.valid_from:
            assert fit.formula.evaluate(n) == value


def test_fit_covariance():
    joint = motzkin_joint_series(10)
    tables = mixed_moment_tables(joint, 2, 10)
    fit = fit_mixed_formula(1, 1, tables[(1, 1)])
    assert fit.formula == reference_formulas()["covariance"]
    assert fit.valid_from == 2   # the cubic gives 2/15 at n = 1, truth is 0
    assert fit.statistic == "joint" and (fit.r, fit.s) == (1, 1)


def test_fit_inversion_variance():
    data = inversion_moment_data(2, 12)
    fit = fit_moment_formula(2, data, statistic="inv")
    assert fit.formula == _inv_variance_formula()
    assert fit.valid_from == 1   # polynomial from the start
    joint = motzkin_joint_series(12)
    tables = mixed_moment_tables(joint, 2, 12)
    assert fit_mixed_formula(2, 0, tables[(2, 0)]).formula == fit.formula


def test_marginal_consistency():
    joint = motzkin_joint_series(20)
    uni = motzkin_footrule_series(20)
    tables = mixed_moment_tables(joint, 6, 20)
    for s in range(2, 7):
        mixed = fit_mixed_formula(0, s, tables[(0, s)])
        direct = fit_moment_formula(s, footrule_moment_data(s, uni, 20))
        assert mixed.formula == direct.formula, s
    for r in range(2, 7):
        mixed = fit_mixed_formula(r, 0, tables[(r, 0)])
        netto_fit = fit_moment_formula(r, inversion_moment_data(r, 20), "inv")
        assert mixed.formula == netto_fit.formula, r


def test_degree_saturation():
    polys = motzkin_footrule_series(UNI_DATA_CAP)
    for r in range(2, 11):
        hi = window_hi(r, 3 * r // 2, UNI_DATA_CAP)
        fit = fit_moment_formula(r, footrule_moment_data(r, polys, hi))
        assert fit.formula.degree == 3 * r // 2, r


def test_odd_inversion_moments_vanish():
    data = inversion_moment_data(3, 10)
    fit = fit_moment_formula(3, data, statistic="inv")
    assert fit.formula == RatPoly(())
    assert fit.valid_from == 1


def test_no_stable_fit():
    data = [(n, Fraction(math.factorial(n))) for n in range(1, 10)]
    with pytest.raises(NoStableFit):
        fit_moment_formula(2, data)


def test_fit_rejects_bad_orders():
    with pytest.raises(ValueError):
        fit_moment_formula(1, [(1, Fraction(0))])
    with pytest.raises(ValueError):
        fit_mixed_formula(-1, 2, [(1, Fraction(0))])


def test_window_hi():
    assert window_hi(10, 15, UNI_DATA_CAP) == 30
    assert window_hi(8, 12, BI_DATA_CAP) == 24
    assert window_hi(2, 3, UNI_DATA_CAP) == 10


def test_normal_moments():
    assert [normal_moment(r) for r in range(3, 11)] == [0, 3, 0, 15, 0, 105,
                                                        0, 945]


def test_fitted_formula_json():
    polys = motzkin_footrule_series(10)
    fit = fit_moment_formula(2, footrule_moment_data(2, polys, 10))
    obj = fit.to_json_obj()
    assert obj["statistic"] == "footrule"
    assert obj["r"] == 2 and obj["s"] is None
    assert obj["valid_from"] == 2
    assert obj["formula"]["coefficients"] == ["7/45", "7/45", "2/45", "2/45"]


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------


def test_run_verification_restricted():
    report = run_verification(max_moment=6, max_total=4)
    assert report.passed
    names = {c.name for c in report.checks}
    assert {"formula:mean", "formula:variance", "formula:m3", "formula:m4",
            "formula:m5", "formula:m6", "formula:covariance",
            "normal-limit:r=5", "binormal-limit:r=2,s=2",
            "threshold:m4"} <= names
    assert "normal-limit:r=7" not in names


def test_run_verification_corrupt_names_the_check():
    report = run_verification(max_moment=2, max_total=0, corrupt=True)
    assert not report.passed
    assert [c.name for c in report.failures()] == ["formula:variance"]


def test_run_verification_bounds():
    with pytest.raises(ValueError):
        run_verification(max_moment=11)
    with pytest.raises(ValueError):
        run_verification(max_total=9)
    with pytest.raises(ValueError):
        run_verification(max_moment=1)


def test_report_serialization():
    report = run_verification(max_moment=2, max_total=0)
    obj = json.loads(report.to_json())
    assert set(obj) == {"checks"}
    for check in obj["checks"]:
        assert set(check) == {"name", "status", "expected", "actual"}
        assert check["status"] in ("pass", "fail")
    table = report.to_table()
    assert "checks passed" in table
    assert "formula:variance" in table


def test_verify_threshold_checks(full_report):
    report, _ = full_report
    by_name = {c.name: c for c in report.checks}
    assert by_name["threshold:mean"].actual == "1"
    assert by_name["threshold:variance"].actual == "2"
    assert by_name["threshold:m3"].actual == "3"
    assert by_name["threshold:m4"].actual == "4"
    for r in (5, 6, 7, 8, 9, 10):
        assert by_name[f"threshold:m{r}"].actual == str(r)
