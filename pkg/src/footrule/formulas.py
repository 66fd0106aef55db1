"""Fitting closed-form moment formulas and verifying the known identities.

The r-th central moment of the footrule over S_n is a polynomial in n of
degree floor(3r/2) -- but only from some threshold n on.  The lab
therefore never assumes validity: for each order it computes exact moment
values over a window of n, finds the largest suffix of the data that a
degree-bounded polynomial interpolates with at least two exact guard
points, and reports the first n of that suffix as ``valid_from``.  A fit
that survives its guards is an identity on the whole tested range, not an
approximation, which is what makes the empirical pipeline rigorous.

Measured thresholds for the footrule are valid_from = r for every
r <= 10 (so e.g. the printed cubic for m_3 gives -104/105 at n = 2 while
the true value there is 0).  Pure inversion moments are polynomial from
n = 1 on, and their odd orders vanish identically.

``reference_formulas`` transcribes the known closed forms once (mean and
variance are classical; the higher ones are the regression targets), and
``run_verification`` re-derives everything from scratch and compares:
fitted formulas against the transcription, scaled footrule limits against
standard normal moments, and scaled mixed limits against the binormal
oracle with correlation 3/sqrt(10).
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import GuardPointMismatch, RatPoly, UniPoly, lagrange_fit
from .enumerators import motzkin_footrule_series, motzkin_joint_series, netto_poly
from .moments import (FOOTRULE_VARIANCE_LEAD, INV_VARIANCE_LEAD,
                      binormal_moment, central_moment, mean_of_poly,
                      mixed_central_moments, scaled_mixed_moment_limit,
                      scaled_moment_limit)

#: Data windows used by the default pipelines (n = 1 .. cap).
UNI_DATA_CAP = 30
BI_DATA_CAP = 24

#: Held-out points required before a fit is accepted.
MIN_GUARDS = 2


class NoStableFit(ValueError):
    """No suffix of the data admits a guarded fit at the degree bound."""


@dataclass(frozen=True)
class FittedFormula:
    """A validated polynomial identity for a moment sequence.

    ``formula`` reproduces the exact moment for every data point with
    n >= valid_from, and provably not at valid_from - 1 when that point
    was in the data.
    """

    statistic: str          # "footrule" | "inv" | "joint"
    r: int
    s: int | None
    formula: RatPoly
    valid_from: int
    fit_window: tuple[int, int]
    guard_count: int

    def to_json_obj(self) -> dict:
        return {
            "statistic": self.statistic,
            "r": self.r,
            "s": self.s,
            "formula": self.formula.to_json_obj(),
            "valid_from": self.valid_from,
            "fit_window": list(self.fit_window),
            "guard_count": self.guard_count,
        }


def _fit_largest_suffix(data: Sequence[tuple[int, Fraction]],
                        degree_bound: int) -> tuple[RatPoly, int, int]:
    """(formula, valid_from, guard_count) for the largest fittable suffix."""
    pts = [(int(n), Fraction(v)) for n, v in data]
    if sorted(n for n, _ in pts) != [n for n, _ in pts]:
        raise ValueError("data must be sorted by n")
    for start in range(len(pts)):
        window = pts[start:]
        if len(window) < degree_bound + 1 + MIN_GUARDS:
            break
        try:
            poly = lagrange_fit(window, degree_bound, MIN_GUARDS)
        except GuardPointMismatch:
            continue
        return poly, window[0][0], len(window) - (degree_bound + 1)
    raise NoStableFit(
        f"no suffix of the {len(pts)} data points fits at degree <= {degree_bound}")


def fit_mean_formula(data: Sequence[tuple[int, Fraction]],
                     statistic: str = "footrule") -> FittedFormula:
    """Fit the raw mean, which is quadratic in n."""
    poly, valid_from, guards = _fit_largest_suffix(data, 2)
    return FittedFormula(statistic, 1, None, poly, valid_from,
                         (data[0][0], data[-1][0]), guards)


def fit_moment_formula(r: int, data: Sequence[tuple[int, Fraction]],
                       statistic: str = "footrule") -> FittedFormula:
    """Fit the r-th central moment (r >= 2) at degree bound floor(3r/2)."""
    if r < 2:
        raise ValueError("central-moment fits need r >= 2; use fit_mean_formula "
                         "for the mean")
    poly, valid_from, guards = _fit_largest_suffix(data, 3 * r // 2)
    return FittedFormula(statistic, r, None, poly, valid_from,
                         (data[0][0], data[-1][0]), guards)


def fit_mixed_formula(r: int, s: int,
                      data: Sequence[tuple[int, Fraction]]) -> FittedFormula:
    """Fit the mixed central moment m_{r,s} at degree bound floor(3(r+s)/2)."""
    if r < 0 or s < 0:
        raise ValueError("moment orders must be >= 0")
    poly, valid_from, guards = _fit_largest_suffix(data, 3 * (r + s) // 2)
    return FittedFormula("joint", r, s, poly, valid_from,
                         (data[0][0], data[-1][0]), guards)


# ---------------------------------------------------------------------------
# data windows
# ---------------------------------------------------------------------------

def window_hi(total_order: int, degree_bound: int, cap: int) -> int:
    """Last n worth computing for a fit of the given order.

    Room for a threshold a little beyond the observed valid_from = order,
    the degree_bound + 1 interpolation nodes, and the guards.
    """
    return min(cap, max(total_order, 1) + degree_bound + 5)


def footrule_moment_data(r: int, polys: Sequence[UniPoly],
                         n_hi: int) -> list[tuple[int, Fraction]]:
    """(n, m_r) pairs from precomputed enumerators N_1 .. (r = 1 is the mean)."""
    out = []
    for n in range(1, n_hi + 1):
        count = math.factorial(n)
        w = polys[n - 1]
        value = mean_of_poly(w, count) if r == 1 else central_moment(w, count, r)
        out.append((n, value))
    return out


def inversion_moment_data(r: int, n_hi: int) -> list[tuple[int, Fraction]]:
    """(n, m_r) pairs for the inversion statistic, from Netto's product."""
    out = []
    for n in range(1, n_hi + 1):
        count = math.factorial(n)
        w = netto_poly(n)
        value = mean_of_poly(w, count) if r == 1 else central_moment(w, count, r)
        out.append((n, value))
    return out


def mixed_moment_tables(bipolys: Sequence,
                        max_total: int, n_hi: int,
                        ) -> dict[tuple[int, int], list[tuple[int, Fraction]]]:
    """Data series for every m_{r,s} with r + s <= max_total, n = 1 .. n_hi."""
    tables: dict[tuple[int, int], list[tuple[int, Fraction]]] = {}
    for n in range(1, n_hi + 1):
        values = mixed_central_moments(bipolys[n - 1], math.factorial(n), max_total)
        for key, value in values.items():
            tables.setdefault(key, []).append((n, value))
    return tables


# ---------------------------------------------------------------------------
# transcribed closed forms
# ---------------------------------------------------------------------------

def reference_formulas() -> dict[str, RatPoly]:
    """The known closed forms, transcribed once, in expanded form.

    Keys: mean, variance, m3..m6 (footrule central moments), covariance
    (between inversions and footrule).  Transcription correctness is part
    of the test surface: each is spot-checked against exact data.
    """
    n = RatPoly.variable()
    return {
        "mean": (n - 1) * (n + 1) / 3,
        "variance": (n + 1) * (2 * n ** 2 + 7) / 45,
        "m3": (n + 2) * (n + 1) * (2 * n ** 2 + 31) * Fraction(-2, 945),
        "m4": (n + 1) * (28 * n ** 5 + 180 * n ** 3 + 160 * n ** 2
                         + 887 * n + 1265) / 4725,
        "m5": (n + 2) * (n + 1) * (44 * n ** 5 - 10 * n ** 4 + 788 * n ** 3
                                   + 86 * n ** 2 + 3587 * n + 8555)
        * Fraction(-4, 93555),
        "m6": (n + 1) * (168168 * n ** 8 - 145288 * n ** 7 + 1800148 * n ** 6
                         + 2180892 * n ** 5 + 18508182 * n ** 4
                         + 32547228 * n ** 3 + 112117257 * n ** 2
                         + 385870348 * n + 368963105) / 127702575,
        "covariance": (n + 1) * (n ** 2 + 1) / 30,
    }


def normal_moment(r: int) -> int:
    """E[Z**r] for standard normal Z: (r-1)!! for even r, 0 for odd."""
    if r % 2:
        return 0
    return math.prod(range(r - 1, 0, -2))


# ---------------------------------------------------------------------------
# verification report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    status: str             # "pass" | "fail"
    expected: str
    actual: str


@dataclass
class VerificationReport:
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status != "pass"]

    def to_json(self) -> str:
        obj = {"checks": [{"name": c.name, "status": c.status,
                           "expected": c.expected, "actual": c.actual}
                          for c in self.checks]}
        return json.dumps(obj, indent=2)

    def to_table(self) -> str:
        name_w = max(len(c.name) for c in self.checks) if self.checks else 4
        lines = [f"{'check':<{name_w}}  {'status':<6}  expected / actual"]
        for c in self.checks:
            tail = c.expected if c.status == "pass" else f"{c.expected} / {c.actual}"
            lines.append(f"{c.name:<{name_w}}  {c.status:<6}  {tail}")
        total = len(self.checks)
        good = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{good}/{total} checks passed")
        return "\n".join(lines)


def _equality_check(name: str, expected, actual) -> Check:
    ok = expected == actual
    to_s = (lambda v: v.to_text() if hasattr(v, "to_text") else str(v))
    return Check(name, "pass" if ok else "fail", to_s(expected), to_s(actual))


def run_verification(max_moment: int = 10, max_total: int = 8,
                     corrupt: bool = False) -> VerificationReport:
    """Re-derive every formula and limit from scratch and compare.

    ``max_moment`` bounds the footrule moment order (2..10); ``max_total``
    bounds r + s for the mixed moments (0..8, 0 disables the bivariate
    half).  ``corrupt`` deliberately corrupts the transcribed variance to
    exercise the failure path.
    """
    if not 2 <= max_moment <= 10:
        raise ValueError("max_moment must be in 2..10")
    if not 0 <= max_total <= 8:
        raise ValueError("max_total must be in 0..8")
    reference = reference_formulas()
    if corrupt:
        reference["variance"] = reference["variance"] + 1

    checks: list[Check] = []

    # --- univariate side ---
    hi_uni = max(window_hi(r, 3 * r // 2, UNI_DATA_CAP)
                 for r in range(2, max_moment + 1))
    hi_uni = max(hi_uni, window_hi(1, 2, UNI_DATA_CAP), 5)
    polys = motzkin_footrule_series(hi_uni)

    # transcription spot checks against exact data, each at an n where the
    # formula is valid (m_r only holds from n = r on, so m6 is checked at 6)
    for name, r in (("mean", 1), ("variance", 2), ("m3", 3), ("m4", 4),
                    ("m5", 5), ("m6", 6)):
        n_spot = max(5, r)
        count = math.factorial(n_spot)
        exact = (mean_of_poly(polys[n_spot - 1], count) if r == 1
                 else central_moment(polys[n_spot - 1], count, r))
        checks.append(_equality_check(
            f"transcription:{name}@n={n_spot}", exact,
            reference_formulas()[name].evaluate(n_spot)))

    mean_fit = fit_mean_formula(
        footrule_moment_data(1, polys, window_hi(1, 2, UNI_DATA_CAP)))
    checks.append(_equality_check("formula:mean", reference["mean"],
                                  mean_fit.formula))
    checks.append(_equality_check("threshold:mean", 1, mean_fit.valid_from))

    fits: dict[int, FittedFormula] = {}
    for r in range(2, max_moment + 1):
        data = footrule_moment_data(r, polys, window_hi(r, 3 * r // 2, UNI_DATA_CAP))
        fits[r] = fit_moment_formula(r, data)
    named = {2: "variance", 3: "m3", 4: "m4", 5: "m5", 6: "m6"}
    for r, name in named.items():
        if r in fits:
            checks.append(_equality_check(f"formula:{name}", reference[name],
                                          fits[r].formula))
    expected_threshold = {2: 2, 3: 3, 4: 4}
    for r in range(2, max_moment + 1):
        name = named.get(r, f"m{r}")
        if r in expected_threshold:
            checks.append(_equality_check(f"threshold:{name}",
                                          expected_threshold[r],
                                          fits[r].valid_from))
        else:
            checks.append(Check(f"threshold:{name}", "pass", "reported",
                                str(fits[r].valid_from)))

    for r in range(3, max_moment + 1):
        limit = scaled_moment_limit(fits[r].formula, fits[2].formula, r)
        checks.append(_equality_check(f"normal-limit:r={r}",
                                      Fraction(normal_moment(r)), limit))

    # --- bivariate side ---
    if max_total >= 2:
        hi_bi = max(window_hi(t, 3 * t // 2, BI_DATA_CAP)
                    for t in range(2, max_total + 1))
        bipolys = motzkin_joint_series(hi_bi)
        tables = mixed_moment_tables(bipolys, max_total, hi_bi)

        checks.append(_equality_check(
            "transcription:covariance@n=5",
            dict(tables[(1, 1)])[5], reference_formulas()["covariance"].evaluate(5)))

        mixed_fits: dict[tuple[int, int], FittedFormula] = {}
        for total in range(max_total + 1):
            for r in range(total + 1):
                s = total - r
                data = tables[(r, s)]
                hi = window_hi(total, 3 * total // 2, BI_DATA_CAP)
                mixed_fits[(r, s)] = fit_mixed_formula(
                    r, s, [d for d in data if d[0] <= hi])

        cov_fit = mixed_fits[(1, 1)]
        checks.append(_equality_check("formula:covariance",
                                      reference["covariance"], cov_fit.formula))
        checks.append(Check("threshold:covariance", "pass", "reported",
                            str(cov_fit.valid_from)))

        lc_inv = mixed_fits[(2, 0)].formula.leading_coefficient
        lc_foot = mixed_fits[(0, 2)].formula.leading_coefficient
        checks.append(_equality_check("variance-lead:inv",
                                      INV_VARIANCE_LEAD, lc_inv))
        checks.append(_equality_check("variance-lead:footrule",
                                      FOOTRULE_VARIANCE_LEAD, lc_foot))

        for total in range(max_total + 1):
            for r in range(total + 1):
                s = total - r
                limit = scaled_mixed_moment_limit(
                    mixed_fits[(r, s)].formula, r, s, lc_inv, lc_foot)
                checks.append(_equality_check(
                    f"binormal-limit:r={r},s={s}", binormal_moment(r, s), limit))

    return VerificationReport(checks)
