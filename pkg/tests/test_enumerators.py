"""Agreement of the fast algorithms with brute force and with each other."""
import math

import pytest

from footrule.algebra import UniPoly
from footrule.enumerators import (SUBSET_FOOTRULE_MAX, SUBSET_JOINT_MAX,
                                  contfrac_footrule_series,
                                  motzkin_footrule_series,
                                  motzkin_joint_series, netto_poly,
                                  series_envelope, subset_footrule_poly,
                                  subset_joint_poly)
from footrule.perms import CapExceeded, brute_footrule_poly, brute_joint_poly


def test_subset_footrule_matches_brute():
    for n in range(1, 9):
        assert subset_footrule_poly(n) == brute_footrule_poly(n), n


def test_subset_joint_matches_brute():
    for n in range(1, 8):
        assert subset_joint_poly(n) == brute_joint_poly(n), n


def test_motzkin_footrule_first_entries():
    series = motzkin_footrule_series(3)
    assert [p.terms for p in series] == [{0: 1}, {0: 1, 2: 1},
                                         {0: 1, 2: 2, 4: 3}]


def test_motzkin_footrule_matches_brute():
    series = motzkin_footrule_series(8)
    for n in range(1, 9):
        assert series[n - 1] == brute_footrule_poly(n), n


def test_motzkin_joint_matches_brute():
    series = motzkin_joint_series(7)
    for n in range(1, 8):
        assert series[n - 1] == brute_joint_poly(n), n


def test_motzkin_counts_and_parity_to_25():
    series = motzkin_footrule_series(25)
    for n in range(1, 26):
        poly = series[n - 1]
        assert poly.evaluate(1) == math.factorial(n)
        assert all(e % 2 == 0 for e in poly.terms)
        assert poly.degree == n * n // 2


def test_motzkin_prefix_stability():
    """Entries do not depend on how far the sequence is computed."""
    short = motzkin_footrule_series(12)
    long = motzkin_footrule_series(20)
    assert short == long[:12]
    # the n = 25 entry from an independent, longer run
    assert motzkin_footrule_series(25)[24] == motzkin_footrule_series(30)[24]
    short_joint = motzkin_joint_series(8)
    long_joint = motzkin_joint_series(12)
    assert short_joint == long_joint[:8]


def test_joint_specializations():
    uni = motzkin_footrule_series(12)
    joint = motzkin_joint_series(12)
    for n in range(1, 13):
        s = joint[n - 1]
        assert s.substitute_p(1) == uni[n - 1]
        assert s.substitute_q(1) == netto_poly(n, var="p")
        assert s.evaluate(1, 1) == math.factorial(n)
        assert s.degree_p == n * (n - 1) // 2


def test_subset_joint_netto_specialization():
    assert subset_joint_poly(6).substitute_q(1) == netto_poly(6, var="p")


def test_netto_small():
    assert netto_poly(1) == UniPoly.one()
    assert netto_poly(3).terms == {0: 1, 1: 2, 2: 2, 3: 1}
    assert netto_poly(12).evaluate(1) == 479001600  # 12!


def test_netto_palindromic():
    for n in range(1, 13):
        poly = netto_poly(n)
        top = n * (n - 1) // 2
        assert poly.degree == top
        for e, c in poly.terms.items():
            assert poly.coefficient(top - e) == c


def test_contfrac_low_orders():
    series = contfrac_footrule_series(2)
    assert series[0] == UniPoly.one()          # c_0 = 1
    assert series[1].terms == {0: 1, 2: 1}     # c_0^2 + lambda_1


def test_contfrac_matches_brute():
    series = contfrac_footrule_series(8)
    for n in range(1, 9):
        assert series[n - 1] == brute_footrule_poly(n), n


def test_contfrac_depth_control():
    # floor(10/2) + 1 = 6 levels are necessary and sufficient for n_max = 10
    with pytest.raises(ValueError, match="truncation depth too small"):
        contfrac_footrule_series(10, depth=5)
    shallow = contfrac_footrule_series(10, depth=6)
    assert shallow == motzkin_footrule_series(10)


def test_subset_caps():
    with pytest.raises(CapExceeded, match="cap exceeded"):
        subset_footrule_poly(SUBSET_FOOTRULE_MAX + 1)
    with pytest.raises(CapExceeded):
        subset_joint_poly(SUBSET_JOINT_MAX + 1)
    with pytest.raises(ValueError):
        subset_footrule_poly(0)
    with pytest.raises(ValueError):
        motzkin_footrule_series(0)


def test_series_envelope_shape():
    entries = motzkin_footrule_series(2)
    env = series_envelope("footrule", "motzkin", entries)
    assert env == {
        "statistic": "footrule",
        "algorithm": "motzkin",
        "n_max": 2,
        "entries": [{"var": "q", "terms": [[0, "1"]]},
                    {"var": "q", "terms": [[0, "1"], [2, "1"]]}],
    }
