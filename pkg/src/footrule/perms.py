"""Permutations of {1, ..., n} and two classical measures of disarray.

A permutation is a tuple of values (pi_1, ..., pi_n) in one-line notation,
always 1-indexed.  Two statistics are computed on it:

* ``footrule`` -- Spearman's footrule, the total displacement
  sum_i |pi_i - i|.  Its value is always even: sum_i (pi_i - i) = 0, and
  flipping a term to its absolute value changes the sum by an even amount.
* ``inversions`` -- the number of pairs i < j with pi_i > pi_j.

The ``brute_*`` enumerators build weight enumerators over all of S_n by
listing the n! permutations in lexicographic order.  They are the ground
truth the polynomial-time algorithms in ``enumerators`` are tested
against, and are capped at n = 10 (10! is already 3.6 million).
"""
from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .algebra import BiPoly, UniPoly

#: Largest n accepted by the brute-force enumerators.
BRUTE_FORCE_MAX = 10


class CapExceeded(ValueError):
    """Requested n is beyond an algorithm's hard cap."""


def as_permutation(values: Iterable[int]) -> tuple[int, ...]:
    """Validate and normalize one-line notation.

    >>> as_permutation([3, 1, 2])
    (3, 1, 2)
    >>> as_permutation([2, 2, 1])
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (2, 2, 1)
    """
    perm = tuple(values)
    n = len(perm)
    if n == 0:
        raise ValueError("empty permutation")
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    return perm


def parse_permutation(text: str) -> tuple[int, ...]:
    """Parse the bracketed text form, e.g. ``"[3,1,2]"``."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"expected bracketed permutation, got {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty permutation")
    try:
        values = [int(part) for part in body.split(",")]
    except ValueError:
        raise ValueError(f"non-integer entry in {text!r}") from None
    return as_permutation(values)


def format_permutation(perm: Sequence[int]) -> str:
    return "[" + ",".join(str(v) for v in perm) + "]"


def footrule(perm: Sequence[int]) -> int:
    """Spearman's footrule sum_i |pi_i - i|.

    >>> footrule((1, 2, 3, 4))
    0
    >>> footrule((3, 2, 1))
    4
    """
    return sum(abs(v - i) for i, v in enumerate(perm, 1))


def inversions(perm: Sequence[int]) -> int:
    """Number of pairs i < j with pi_i > pi_j.

    >>> inversions((1, 2, 3))
    0
    >>> inversions((3, 2, 1))
    3
    """
    n = len(perm)
    total = 0
    for i in range(n - 1):
        vi = perm[i]
        for j in range(i + 1, n):
            total += vi > perm[j]
    return total


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    """The inverse in one-line notation.

    >>> inverse_permutation((2, 3, 1))
    (3, 1, 2)
    """
    out = [0] * len(perm)
    for i, v in enumerate(perm, 1):
        out[v - 1] = i
    return tuple(out)


def _check_brute_cap(n: int) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > BRUTE_FORCE_MAX:
        raise CapExceeded(
            f"brute-force cap exceeded: n={n} > {BRUTE_FORCE_MAX}; "
            "use a polynomial-time enumerator instead")


def brute_footrule_poly(n: int) -> UniPoly:
    """Weight enumerator sum over S_n of q**footrule, by full enumeration.

    Evaluating the result at q = 1 gives n!.
    """
    _check_brute_cap(n)
    idx = tuple(range(1, n + 1))
    hist: dict[int, int] = {}
    for perm in itertools.permutations(idx):
        k = 0
        for i, v in zip(idx, perm):
            k += v - i if v >= i else i - v
        hist[k] = hist.get(k, 0) + 1
    return UniPoly(hist)


def brute_joint_poly(n: int) -> BiPoly:
    """Joint enumerator sum over S_n of p**inversions * q**footrule."""
    _check_brute_cap(n)
    idx = tuple(range(1, n + 1))
    hist: dict[tuple[int, int], int] = {}
    for perm in itertools.permutations(idx):
        fr = 0
        for i, v in zip(idx, perm):
            fr += v - i if v >= i else i - v
        inv = 0
        for i in range(n - 1):
            vi = perm[i]
            for j in range(i + 1, n):
                inv += vi > perm[j]
        key = (inv, fr)
        hist[key] = hist.get(key, 0) + 1
    return BiPoly(hist)
