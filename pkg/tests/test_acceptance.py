"""Acceptance criteria, one test per criterion.

Every equality is exact (integer/rational arithmetic, zero tolerance);
the only numeric tolerances are the stated wall-clock budgets.  Each test
prints a single PASS line on success so a -s run reads as a checklist.
"""
import csv
import io
import itertools
import math
import time
from fractions import Fraction

from footrule.cli import main
from footrule.enumerators import (contfrac_footrule_series, netto_poly,
                                  subset_footrule_poly, subset_joint_poly)
from footrule.moments import (binormal_moment, central_moment,
                              mixed_central_moments)
from footrule.perms import brute_footrule_poly, brute_joint_poly, footrule, inversions


def _report(line: str) -> None:
    print(f"PASS {line}")


# ---------------------------------------------------------------------------
# independent oracle: enumerate permutations, center raw power sums
# ---------------------------------------------------------------------------

def joint_histogram(n: int) -> dict[tuple[int, int], int]:
    hist: dict[tuple[int, int], int] = {}
    for perm in itertools.permutations(range(1, n + 1)):
        key = (inversions(perm), footrule(perm))
        hist[key] = hist.get(key, 0) + 1
    return hist


def oracle_central(hist: dict[int, int], count: int, r: int) -> Fraction:
    raws = [Fraction(sum(c * v ** j for v, c in hist.items()), count)
            for j in range(r + 1)]
    mu = raws[1] if r >= 1 else Fraction(0)
    return sum(math.comb(r, j) * (-mu) ** (r - j) * raws[j]
               for j in range(r + 1))


def oracle_mixed(hist: dict[tuple[int, int], int], count: int,
                 r: int, s: int) -> Fraction:
    def raw(i: int, j: int) -> Fraction:
        return Fraction(sum(c * a ** i * b ** j
                            for (a, b), c in hist.items()), count)

    mx, my = raw(1, 0), raw(0, 1)
    return sum(math.comb(r, i) * math.comb(s, j)
               * (-mx) ** (r - i) * (-my) ** (s - j) * raw(i, j)
               for i in range(r + 1) for j in range(s + 1))


# ---------------------------------------------------------------------------
# criteria
# ---------------------------------------------------------------------------


def test_criterion_1_cross_algorithm_agreement(uni50, bi24):
    start = time.perf_counter()
    uni, _ = uni50
    bi, _ = bi24

    cf = contfrac_footrule_series(9)
    for n in range(1, 10):
        reference = brute_footrule_poly(n)
        assert subset_footrule_poly(n) == reference, f"subset vs brute at {n}"
        assert uni[n - 1] == reference, f"motzkin vs brute at {n}"
        assert cf[n - 1] == reference, f"continued fraction vs brute at {n}"
    for n in range(10, 19):
        assert subset_footrule_poly(n) == uni[n - 1], f"subset vs motzkin at {n}"

    for n in range(1, 9):
        reference = brute_joint_poly(n)
        assert subset_joint_poly(n) == reference, f"joint subset vs brute at {n}"
        assert bi[n - 1] == reference, f"joint motzkin vs brute at {n}"
    for n in range(9, 17):
        assert subset_joint_poly(n) == bi[n - 1], f"joint subset vs motzkin at {n}"

    elapsed = time.perf_counter() - start
    assert elapsed < 120, f"criterion 1 took {elapsed:.1f}s"
    _report(f"criterion 1: four-way agreement (n<=9 brute, n<=18 subset, "
            f"n<=16 joint) in {elapsed:.1f}s")


def test_criterion_2_scale_reproduction(uni50, bi24):
    uni, uni_elapsed = uni50
    bi, bi_elapsed = bi24
    assert len(uni) == 50
    assert uni[49].evaluate(1) == math.factorial(50)
    assert uni[49].degree == 50 * 50 // 2
    assert uni_elapsed < 300, f"n<=50 run took {uni_elapsed:.1f}s"
    assert len(bi) >= 22
    assert bi[21].evaluate(1, 1) == math.factorial(22)
    assert bi[21].degree_p == 22 * 21 // 2
    assert bi_elapsed < 600, f"n<=24 joint run took {bi_elapsed:.1f}s"
    _report(f"criterion 2: N_n to n=50 in {uni_elapsed:.2f}s, "
            f"S_n to n=24 in {bi_elapsed:.2f}s")


def test_criterion_3_parity(uni50):
    uni, _ = uni50
    for n, poly in enumerate(uni, 1):
        assert all(e % 2 == 0 for e in poly.terms), f"odd exponent at n={n}"
    _report("criterion 3: every N_n (n<=50) is supported on even exponents")


def test_criterion_4_formula_regression(full_report):
    report, _ = full_report
    by_name = {c.name: c for c in report.checks}
    for name in ("formula:mean", "formula:variance", "formula:m3",
                 "formula:m4", "formula:m5", "formula:m6",
                 "formula:covariance"):
        assert by_name[name].status == "pass", by_name[name]
    thresholds = {"threshold:mean": "1", "threshold:variance": "2",
                  "threshold:m3": "3", "threshold:m4": "4"}
    for name, expected in thresholds.items():
        assert by_name[name].status == "pass"
        assert by_name[name].actual == expected
    reported = {name.split(":")[1]: check.actual
                for name, check in by_name.items()
                if name.startswith("threshold:")}
    _report(f"criterion 4: fitted formulas equal the transcribed closed "
            f"forms; thresholds {reported}")


def test_criterion_5_normal_limits(full_report):
    report, elapsed = full_report
    by_name = {c.name: c for c in report.checks}
    expected = {3: "0", 4: "3", 5: "0", 6: "15", 7: "0", 8: "105",
                9: "0", 10: "945"}
    for r, value in expected.items():
        check = by_name[f"normal-limit:r={r}"]
        assert check.status == "pass"
        assert check.actual == value
    assert elapsed < 300, f"verification run took {elapsed:.1f}s"
    _report(f"criterion 5: scaled footrule limits r=3..10 are "
            f"0,3,0,15,0,105,0,945 ({elapsed:.1f}s)")


def test_criterion_6_binormal_limits(full_report):
    report, elapsed = full_report
    by_name = {c.name: c for c in report.checks}
    count = 0
    for total in range(9):
        for r in range(total + 1):
            s = total - r
            check = by_name[f"binormal-limit:r={r},s={s}"]
            assert check.status == "pass", check
            assert check.expected == binormal_moment(r, s).to_text()
            count += 1
    assert by_name["binormal-limit:r=1,s=1"].actual == "3/10*sqrt(10)"
    assert elapsed < 900, f"verification run took {elapsed:.1f}s"
    _report(f"criterion 6: all {count} scaled mixed limits (r+s<=8) equal "
            f"the binormal moments with rho=3/sqrt(10) ({elapsed:.1f}s)")


def test_criterion_7_netto_specializations(uni50, bi24):
    uni, _ = uni50
    bi, _ = bi24
    for n, joint in enumerate(bi, 1):
        assert joint.substitute_q(1) == netto_poly(n, var="p"), n
        assert joint.substitute_p(1) == uni[n - 1], n
    _report(f"criterion 7: S_n(p,1) is Netto's product and S_n(1,q) = N_n "
            f"for n<=24")


def test_criterion_8_moment_oracle_equivalence(uni50, bi24):
    uni, _ = uni50
    bi, _ = bi24
    for n in range(1, 10):
        count = math.factorial(n)
        hist = joint_histogram(n)
        marginal: dict[int, int] = {}
        for (_, b), c in hist.items():
            marginal[b] = marginal.get(b, 0) + c
        for r in range(7):
            assert (central_moment(uni[n - 1], count, r)
                    == oracle_central(marginal, count, r)), (n, r)
        generating = mixed_central_moments(bi[n - 1], count, 6)
        for (r, s), value in generating.items():
            assert value == oracle_mixed(hist, count, r, s), (n, r, s)
    _report("criterion 8: generating-function moments equal direct "
            "summation over all n! permutations (n<=9, r<=6, r+s<=6)")


def test_criterion_9_brute_force_infeasibility_evidence(capsys):
    code = main(["bench", "--n-max", "9"])
    out = capsys.readouterr().out
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    brute_times = {int(row["n"]): float(row["seconds"])
                   for row in rows if row["algorithm"] == "brute"}
    motzkin_times = {int(row["n"]): float(row["seconds"])
                     for row in rows if row["algorithm"] == "motzkin"}
    assert set(brute_times) == set(range(1, 10))
    assert set(motzkin_times) == set(range(1, 10))
    assert all(t >= 0 for t in brute_times.values())
    # evidence, not assertion: the factorial growth speaks for itself
    with capsys.disabled():
        print("\nbench table (brute-force growth is the evidence):")
        print(out)
    _report("criterion 9: bench table produced; brute timings through n=9 "
            "exhibit factorial growth")
