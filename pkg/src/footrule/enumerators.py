"""Polynomial-time enumerators for footrule and joint weight enumerators.

Let N_n(q) = sum over S_n of q**footrule and S_n(p, q) = sum over S_n of
p**inversions * q**footrule.  Four routes compute them without touching
all n! permutations:

Subset dynamic programming.  Filling positions r, r+1, ..., n left to
right, the still-unplaced values form an arbitrary subset while the
remaining positions are always a suffix, so a bitmask of unplaced values
is a complete state (r is n minus its popcount plus one).  Placing value
a at position r contributes q**|r - a|, and, in the joint version,
p**(number of smaller values still unplaced).  Memory grows like 2**n,
hence the hard caps.

Weighted Motzkin paths.  F(a, b) denotes the weight enumerator of
height-labelled lattice paths of length a from level 0 to level b with
steps up/down/level, weighted so that F(n, 0) = N_n(q):

    F(a, b) = q**(2b) * ((b+1) F(a-1, b+1) + b F(a-1, b-1)
                          + (2b+1) F(a-1, b)),
    F(0, 0) = 1,  F(a, b) = 0 for b < 0.

Rows are computed one at a time keeping only the previous row, and row a
only needs levels b <= min(a, N - a): a path must still return to level 0
within the remaining steps.  Time and memory are quadratic in N.

The joint refinement replaces the integer level factors by q-integers
[b] = 1 + p + ... + p**(b-1) (written in p here):

    G(a, b) = (p q**2)**b * ([b+1] G(a-1, b+1) + [b] G(a-1, b-1)
                              + ([b] + [b+1]) G(a-1, b)),

with G(0, 0) = 1, and S_n(p, q) = G(n, 0).  Setting p = 1 collapses [b]
to b and recovers F.

Continued fraction.  The same step weights give a Jacobi-type continued
fraction for the generating function in x:

    sum_n N_n(q) x**n  =  1 / (1 - c_0 x - lam_1 x**2 / (1 - c_1 x - ...))

with c_b = (2b+1) q**(2b) and lam_b = b**2 q**(4b-2) (level weight at b,
and the product of the up-step into b with the down-step out of it).  A
path of length N never climbs above floor(N/2), so truncating the
fraction at that depth leaves every coefficient up to x**N exact.

Netto's classical product Prod_{i<=n} (1 + q + ... + q**(i-1)) generates
the inversion distribution and serves as the q = 1 specialization check
for S_n(p, q).

Internally the two dynamic programs pack each polynomial into a single
big integer (fixed-width coefficient slots).  Every coefficient is a
count bounded by n!, all intermediate sums are bounded by the final
counts, so a slot width of max-count bits cannot overflow and polynomial
addition, monomial shifts, and q-integer multiplication become plain
integer arithmetic.  All results are exact; everything is deterministic.
"""
from __future__ import annotations

import itertools
import math

from .algebra import BiPoly, UniPoly
from .perms import CapExceeded

#: Hard caps for the subset dynamic programs (2**n memo entries).
SUBSET_FOOTRULE_MAX = 20
SUBSET_JOINT_MAX = 18


def _check_cap(n: int, cap: int, what: str) -> None:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > cap:
        raise CapExceeded(
            f"{what} cap exceeded: n={n} > {cap}; "
            "use the Motzkin-path enumerator instead")


# ---------------------------------------------------------------------------
# packed-slot helpers
# ---------------------------------------------------------------------------

def _slot_bytes(max_count: int) -> int:
    """Bytes per coefficient slot so that any count <= max_count fits."""
    return (max_count.bit_length() + 7) // 8 or 1


def _unpack(packed: int, width: int) -> dict[int, int]:
    """Decode {slot index: value} for the nonzero width-byte slots."""
    if not packed:
        return {}
    raw = packed.to_bytes((packed.bit_length() + 7) // 8, "little")
    out: dict[int, int] = {}
    for s in range(0, len(raw), width):
        value = int.from_bytes(raw[s:s + width], "little")
        if value:
            out[s // width] = value
    return out


# ---------------------------------------------------------------------------
# subset dynamic programming
# ---------------------------------------------------------------------------

def subset_footrule_poly(n: int) -> UniPoly:
    """N_n(q) via the bitmask DP over unplaced values (n <= 20)."""
    _check_cap(n, SUBSET_FOOTRULE_MAX, "subset DP")
    width = _slot_bytes(math.factorial(n))
    bits = 8 * width
    prev = {0: 1}
    for k in range(1, n + 1):
        r = n - k + 1
        cur: dict[int, int] = {}
        for chosen in itertools.combinations(range(n), k):
            mask = 0
            for t in chosen:
                mask |= 1 << t
            acc = 0
            for t in chosen:
                acc += prev[mask ^ (1 << t)] << (bits * abs(r - t - 1))
            cur[mask] = acc
        prev = cur
    return UniPoly(_unpack(prev[(1 << n) - 1], width))


def subset_joint_poly(n: int) -> BiPoly:
    """S_n(p, q) via the bitmask DP (n <= 18).

    Placing value a at the current position r adds |r - a| to the
    footrule and one inversion per smaller value still unplaced.
    """
    _check_cap(n, SUBSET_JOINT_MAX, "subset DP")
    width = _slot_bytes(math.factorial(n))
    bits = 8 * width
    stride = n * n // 2 + 1  # slot = e_p * stride + e_q
    prev = {0: 1}
    for k in range(1, n + 1):
        r = n - k + 1
        cur: dict[int, int] = {}
        for chosen in itertools.combinations(range(n), k):
            mask = 0
            for t in chosen:
                mask |= 1 << t
            acc = 0
            for t in chosen:
                low = 1 << t
                smaller = (mask & (low - 1)).bit_count()
                acc += prev[mask ^ low] << (bits * (smaller * stride + abs(r - t - 1)))
            cur[mask] = acc
        prev = cur
    packed = prev[(1 << n) - 1]
    return BiPoly({(s // stride, s % stride): c
                   for s, c in _unpack(packed, width).items()})


# ---------------------------------------------------------------------------
# weighted Motzkin paths
# ---------------------------------------------------------------------------

def _motzkin_count_rows(n_max: int) -> int:
    """Largest value in the q=1 count table; bounds every coefficient."""
    biggest = 1
    prev = {0: 1}
    for a in range(1, n_max + 1):
        cur = {}
        for b in range(min(a, n_max - a) + 1):
            v = ((b + 1) * prev.get(b + 1, 0) + b * prev.get(b - 1, 0)
                 + (2 * b + 1) * prev.get(b, 0))
            cur[b] = v
            if v > biggest:
                biggest = v
        prev = cur
    return biggest


def motzkin_footrule_series(n_max: int) -> list[UniPoly]:
    """[N_1(q), ..., N_{n_max}(q)] by the level-weighted path recurrence.

    Quadratic in n_max; this is the supported route beyond the subset-DP
    caps (the design target is n_max = 50).
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    width = _slot_bytes(_motzkin_count_rows(n_max))
    bits = 8 * width
    out: list[UniPoly] = []
    prev = {0: 1}
    for a in range(1, n_max + 1):
        cur: dict[int, int] = {}
        for b in range(min(a, n_max - a) + 1):
            acc = ((b + 1) * prev.get(b + 1, 0) + b * prev.get(b - 1, 0)
                   + (2 * b + 1) * prev.get(b, 0))
            cur[b] = acc << (bits * b)  # the q**(2b) step weight
        prev = cur
        # q-exponents are all even; slots hold half-exponents
        out.append(UniPoly({2 * s: c for s, c in _unpack(prev[0], width).items()}))
    return out


def motzkin_joint_series(n_max: int) -> list[BiPoly]:
    """[S_1(p, q), ..., S_{n_max}(p, q)] by the q-integer refinement.

    The design target is n_max = 24.  The q-integers [b] are materialized
    once per run as packed multipliers, so each table entry costs three
    big-integer multiplications.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    width = _slot_bytes(_motzkin_count_rows(n_max))
    bits = 8 * width
    stride = n_max * n_max // 4 + 1  # slot = e_p * stride + e_q/2
    # [b] = 1 + p + ... + p**(b-1) as a packed integer
    qint = [sum(1 << (bits * stride * j) for j in range(b))
            for b in range(n_max + 2)]
    out: list[BiPoly] = []
    prev = {0: 1}
    for a in range(1, n_max + 1):
        cur: dict[int, int] = {}
        for b in range(min(a, n_max - a) + 1):
            acc = (qint[b + 1] * prev.get(b + 1, 0) + qint[b] * prev.get(b - 1, 0)
                   + (qint[b] + qint[b + 1]) * prev.get(b, 0))
            cur[b] = acc << (bits * (stride * b + b))  # the (p q**2)**b weight
        prev = cur
        out.append(BiPoly({(s // stride, 2 * (s % stride)): c
                           for s, c in _unpack(prev[0], width).items()}))
    return out


# ---------------------------------------------------------------------------
# Netto's product
# ---------------------------------------------------------------------------

def netto_poly(n: int, var: str = "q") -> UniPoly:
    """Prod_{i=1..n} (1 + q + ... + q**(i-1)), the inversion enumerator.

    Degree n(n-1)/2, value n! at q = 1, palindromic coefficients.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    coeffs = [1]
    for i in range(2, n + 1):
        # multiply by (1 + q + ... + q**(i-1)) with a sliding window sum
        out = [0] * (len(coeffs) + i - 1)
        running = 0
        for j in range(len(out)):
            if j < len(coeffs):
                running += coeffs[j]
            if 0 <= j - i < len(coeffs):
                running -= coeffs[j - i]
            out[j] = running
        coeffs = out
    return UniPoly({e: c for e, c in enumerate(coeffs) if c}, var)


# ---------------------------------------------------------------------------
# continued-fraction expansion
# ---------------------------------------------------------------------------

def contfrac_footrule_series(n_max: int, depth: int | None = None) -> list[UniPoly]:
    """[N_1(q), ..., N_{n_max}(q)] by expanding the truncated J-fraction.

    The fraction is expanded bottom-up as a power series in x to order
    n_max, with UniPoly coefficients.  ``depth`` is the number of levels
    kept; the default ceil(n_max/2) + 1 is always sufficient, and
    anything below floor(n_max/2) + 1 is rejected as too shallow.

    This is the least efficient of the fast routes (each level costs a
    full series inversion); it exists as an independent cross-check.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    need = n_max // 2 + 1
    if depth is None:
        depth = (n_max + 1) // 2 + 1
    if depth < need:
        raise ValueError(
            f"truncation depth too small for requested n_max: "
            f"need >= {need} levels, got {depth}")

    zero = UniPoly.zero()
    one = UniPoly.one()

    def series_inverse(a: list[UniPoly]) -> list[UniPoly]:
        # 1/A as a power series; requires a[0] == 1
        b = [one] + [zero] * n_max
        for m in range(1, n_max + 1):
            acc = zero
            for i in range(1, m + 1):
                if a[i]:
                    acc = acc - a[i] * b[m - i]
            b[m] = acc
        return b

    tail: list[UniPoly] | None = None
    for level in range(depth - 1, -1, -1):
        c = UniPoly.monomial(2 * level + 1, 2 * level)
        a = [one, -c] + [zero] * (n_max - 1)
        if tail is not None:
            lam = UniPoly.monomial((level + 1) ** 2, 4 * (level + 1) - 2)
            for m in range(2, n_max + 1):
                a[m] = a[m] - lam * tail[m - 2]
        tail = series_inverse(a)
    assert tail is not None
    return tail[1:n_max + 1]


# ---------------------------------------------------------------------------
# sequence envelope
# ---------------------------------------------------------------------------

def series_envelope(statistic: str, algorithm: str,
                    entries: list[UniPoly] | list[BiPoly]) -> dict:
    """JSON envelope for an enumerated sequence."""
    return {
        "statistic": statistic,
        "algorithm": algorithm,
        "n_max": len(entries),
        "entries": [p.to_json_obj() for p in entries],
    }
