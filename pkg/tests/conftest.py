"""Shared fixtures: the expensive enumerator runs happen once per session."""
import time

import pytest

from footrule.enumerators import motzkin_footrule_series, motzkin_joint_series
from footrule.formulas import run_verification


@pytest.fixture(scope="session")
def uni50():
    """(N_1..N_50 via the Motzkin recurrence, elapsed seconds)."""
    start = time.perf_counter()
    polys = motzkin_footrule_series(50)
    return polys, time.perf_counter() - start


@pytest.fixture(scope="session")
def bi24():
    """(S_1..S_24 via the bivariate Motzkin recurrence, elapsed seconds)."""
    start = time.perf_counter()
    polys = motzkin_joint_series(24)
    return polys, time.perf_counter() - start


@pytest.fixture(scope="session")
def full_report():
    """(full verification report, elapsed seconds)."""
    start = time.perf_counter()
    report = run_verification(max_moment=10, max_total=8)
    return report, time.perf_counter() - start
