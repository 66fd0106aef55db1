"""Exact moments of weight enumerators, scaled limits, and the binormal oracle.

A weight enumerator W(q) = sum_k c_k q**k over a population of ``count``
objects turns into a probability generating function W/count; its moments
are extracted here as exact rationals.  Central moments are computed by
direct summation sum_k c_k (k - mu)**r / count.  The classical operator
form, applying (q d/dq) r times to W(q)/q**mu and evaluating at q = 1, is
provided as an independent cross-check.

Scaled-moment limits live in the quadratic extension Q[sqrt(10)]: the
asymptotic correlation between inversions and footrule is 3/sqrt(10), so
mixed limits of odd order pick up a single sqrt(10) factor.  The
``Sqrt10Value`` type keeps those values exact (a + b*sqrt(10) with
rational a, b); there is no floating point anywhere.

``binormal_moment`` gives the comparison target: the mixed moments
E[X**r Y**s] of the standard bivariate normal with correlation
rho = 3/sqrt(10), via the Stein-type recurrence

    M(r, s) = (r-1) M(r-2, s) + rho * s * M(r-1, s-1)      (r >= 1),
    M(0, s) = (s-1) M(0, s-2),  M(0, 0) = 1.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .algebra import BiPoly, RatPoly, UniPoly, fraction_to_str

#: Leading coefficients (in n**3) of the two variances: inversions grow
#: like n**3/36, the footrule like 2 n**3/45.
INV_VARIANCE_LEAD = Fraction(1, 36)
FOOTRULE_VARIANCE_LEAD = Fraction(2, 45)


def _check_count(w: UniPoly | BiPoly, count: int) -> None:
    total = sum(w.terms.values())
    if count <= 0 or total != count:
        raise ValueError(f"count mismatch: poly sums to {total}, caller said {count}")


def mean_of_poly(w: UniPoly, count: int) -> Fraction:
    """E[k] for the distribution with weight enumerator w and |A| = count."""
    _check_count(w, count)
    return Fraction(sum(e * c for e, c in w.terms.items()), count)


def central_moment(w: UniPoly, count: int, r: int) -> Fraction:
    """r-th moment about the mean, exactly.

    m_0 = 1 and m_1 = 0 by construction.
    """
    if r < 0:
        raise ValueError("moment order must be >= 0")
    _check_count(w, count)
    mu = Fraction(sum(e * c for e, c in w.terms.items()), count)
    num, den = mu.numerator, mu.denominator
    # sum_k c_k (k - mu)^r over a common denominator keeps everything integral
    total = sum(c * (e * den - num) ** r for e, c in w.terms.items())
    return Fraction(total, den ** r * count)


def central_moment_qdq(w: UniPoly, count: int, r: int) -> Fraction:
    """Cross-check via the operator form ((q d/dq)^r W(q)/q**mu at q = 1).

    q d/dq maps q**(k - mu) to (k - mu) q**(k - mu), so each application
    multiplies every coefficient by its (shifted) exponent; evaluation at
    q = 1 then sums the coefficients.  Mathematically identical to
    ``central_moment`` but exercised as a separate code path.
    """
    if r < 0:
        raise ValueError("moment order must be >= 0")
    _check_count(w, count)
    mu = mean_of_poly(w, count)
    spectrum = [(Fraction(e) - mu, Fraction(c, count)) for e, c in w.terms.items()]
    for _ in range(r):
        spectrum = [(exp, exp * coeff) for exp, coeff in spectrum]
    return sum((coeff for _, coeff in spectrum), Fraction(0))


def mixed_central_moment(w: BiPoly, count: int, r: int, s: int) -> Fraction:
    """E[(inv - mu_inv)^r (foot - mu_foot)^s], exactly; (1,1) is the covariance."""
    if r < 0 or s < 0:
        raise ValueError("moment orders must be >= 0")
    _check_count(w, count)
    sx = sum(ep * c for (ep, _), c in w.terms.items())
    sy = sum(eq * c for (_, eq), c in w.terms.items())
    mx, my = Fraction(sx, count), Fraction(sy, count)
    nx, dx = mx.numerator, mx.denominator
    ny, dy = my.numerator, my.denominator
    total = sum(c * (ep * dx - nx) ** r * (eq * dy - ny) ** s
                for (ep, eq), c in w.terms.items())
    return Fraction(total, dx ** r * dy ** s * count)


def mixed_central_moments(w: BiPoly, count: int,
                          max_total: int) -> dict[tuple[int, int], Fraction]:
    """All m_{r,s} with r + s <= max_total in one pass.

    Identical values to ``mixed_central_moment``, but the double power
    sums are accumulated bucket by bucket so large enumerators are only
    traversed once.
    """
    if max_total < 0:
        raise ValueError("max_total must be >= 0")
    _check_count(w, count)
    sx = sum(ep * c for (ep, _), c in w.terms.items())
    sy = sum(eq * c for (_, eq), c in w.terms.items())
    mx, my = Fraction(sx, count), Fraction(sy, count)
    nx, dx = mx.numerator, mx.denominator
    ny, dy = my.numerator, my.denominator
    buckets: dict[int, list[tuple[int, int]]] = {}
    for (ep, eq), c in w.terms.items():
        buckets.setdefault(ep, []).append((eq, c))
    sums = [[0] * (max_total + 1) for _ in range(max_total + 1)]
    for ep, items in buckets.items():
        col = [0] * (max_total + 1)
        for eq, c in items:
            y = eq * dy - ny
            acc = c
            for s in range(max_total + 1):
                col[s] += acc
                acc *= y
        x = ep * dx - nx
        xp = 1
        for r in range(max_total + 1):
            row = sums[r]
            for s in range(max_total + 1 - r):
                row[s] += xp * col[s]
            xp *= x
    return {(r, s): Fraction(sums[r][s], dx ** r * dy ** s * count)
            for r in range(max_total + 1) for s in range(max_total + 1 - r)}


# ---------------------------------------------------------------------------
# exact values in Q[sqrt(10)]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Sqrt10Value:
    """Exact number rational + coeff * sqrt(10).

    The representation is unique (sqrt(10) is irrational), so equality is
    componentwise.
    """

    rational: Fraction
    coeff: Fraction = Fraction(0)

    @classmethod
    def of(cls, rational, coeff=0) -> "Sqrt10Value":
        return cls(Fraction(rational), Fraction(coeff))

    @property
    def is_rational(self) -> bool:
        return not self.coeff

    def __add__(self, other: "Sqrt10Value") -> "Sqrt10Value":
        return Sqrt10Value(self.rational + other.rational, self.coeff + other.coeff)

    def __sub__(self, other: "Sqrt10Value") -> "Sqrt10Value":
        return Sqrt10Value(self.rational - other.rational, self.coeff - other.coeff)

    def __neg__(self) -> "Sqrt10Value":
        return Sqrt10Value(-self.rational, -self.coeff)

    def __mul__(self, other: "Sqrt10Value | Fraction | int") -> "Sqrt10Value":
        if isinstance(other, (int, Fraction)):
            return Sqrt10Value(self.rational * other, self.coeff * other)
        return Sqrt10Value(
            self.rational * other.rational + 10 * self.coeff * other.coeff,
            self.rational * other.coeff + self.coeff * other.rational)

    __rmul__ = __mul__

    def __truediv__(self, other: "Sqrt10Value | Fraction | int") -> "Sqrt10Value":
        if isinstance(other, (int, Fraction)):
            inv = Fraction(1) / Fraction(other)
            return Sqrt10Value(self.rational * inv, self.coeff * inv)
        norm = other.rational ** 2 - 10 * other.coeff ** 2
        if not norm:
            raise ZeroDivisionError("division by zero in Q[sqrt(10)]")
        conj = Sqrt10Value(other.rational, -other.coeff)
        prod = self * conj
        return Sqrt10Value(prod.rational / norm, prod.coeff / norm)

    def sign(self) -> int:
        """Sign of the real value, computed exactly."""
        a, b = self.rational, self.coeff
        if not a and not b:
            return 0
        if a >= 0 and b >= 0:
            return 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare a**2 with 10 b**2
        diff = a * a - 10 * b * b
        if not diff:  # impossible: sqrt(10) irrational, but keep total
            return 0
        big_is_a = diff > 0
        return (1 if a > 0 else -1) if big_is_a else (1 if b > 0 else -1)

    def to_text(self) -> str:
        if self.is_rational:
            return str(self.rational)
        mag = abs(self.coeff)
        tail = "sqrt(10)" if mag == 1 else f"{mag}*sqrt(10)"
        if not self.rational:
            return ("-" if self.coeff < 0 else "") + tail
        return f"{self.rational}{'-' if self.coeff < 0 else '+'}{tail}"

    def to_json_obj(self) -> dict:
        return {"rational": fraction_to_str(self.rational),
                "sqrt10_coeff": fraction_to_str(self.coeff)}

    def __str__(self) -> str:
        return self.to_text()


#: Asymptotic correlation between inversions and the footrule,
#: 3/sqrt(10) = (3/10) sqrt(10).
RHO = Sqrt10Value(Fraction(0), Fraction(3, 10))


def _sqrt_to_sqrt10(value: Fraction) -> Sqrt10Value:
    """Exact square root of a positive rational inside Q[sqrt(10)].

    Works whenever the squarefree part of the value is 1 or 10, which
    covers both variance growth rates (1/36 and 2/45).
    """
    if value <= 0:
        raise ValueError(f"cannot take sqrt of {value}")
    inner = value.numerator * value.denominator  # sqrt(value) = sqrt(inner)/den
    square, free = 1, 1
    d = 2
    rest = inner
    while d * d <= rest:
        if rest % d == 0:
            power = 0
            while rest % d == 0:
                rest //= d
                power += 1
            square *= d ** (power // 2)
            if power % 2:
                free *= d
        d += 1
    if rest > 1:
        free *= rest
    if free == 1:
        return Sqrt10Value(Fraction(square, value.denominator))
    if free == 10:
        return Sqrt10Value(Fraction(0), Fraction(square, value.denominator))
    raise ValueError(f"sqrt({value}) does not lie in Q[sqrt(10)]")


def scaled_moment_limit(m_r: RatPoly, m_2: RatPoly, r: int) -> Fraction:
    """lim_{n->inf} m_r(n) / m_2(n)**(r/2) for the footrule moments.

    The variance has degree 3 and m_r has degree at most floor(3r/2), so
    the limit is 0 for odd r and a leading-coefficient ratio for even r.
    A degree above the bound means a bad fit upstream and raises.
    """
    if r < 2:
        raise ValueError("scaled limits need r >= 2")
    if m_2.degree != 3:
        raise ValueError(f"variance must have degree 3, got {m_2.degree}")
    bound = 3 * r // 2
    if m_r.degree > bound:
        raise ValueError(
            f"degree bound violated: deg m_{r} = {m_r.degree} > {bound}")
    if 2 * m_r.degree < 3 * r:
        return Fraction(0)
    # here r is even and m_r saturates its bound
    return m_r.leading_coefficient / m_2.leading_coefficient ** (r // 2)


def scaled_mixed_moment_limit(m_rs: RatPoly, r: int, s: int,
                              lc_inv_var: Fraction = INV_VARIANCE_LEAD,
                              lc_foot_var: Fraction = FOOTRULE_VARIANCE_LEAD,
                              ) -> Sqrt10Value:
    """lim m_{r,s}(n) / (sigma_inv(n)**r sigma_foot(n)**s), in Q[sqrt(10)].

    Both variances grow like their leading coefficient times n**3, so the
    scaling divides by lc_inv**(r/2) lc_foot**(s/2) n**(3(r+s)/2); odd
    exponents introduce exact square roots, which stay inside Q[sqrt(10)]
    for the two leading coefficients at hand.
    """
    if r < 0 or s < 0:
        raise ValueError("moment orders must be >= 0")
    bound = 3 * (r + s) // 2
    if m_rs.degree > bound:
        raise ValueError(
            f"degree bound violated: deg m_({r},{s}) = {m_rs.degree} > {bound}")
    if 2 * m_rs.degree < 3 * (r + s):
        return Sqrt10Value(Fraction(0))
    denom = Sqrt10Value(lc_inv_var ** (r // 2) * lc_foot_var ** (s // 2))
    if r % 2:
        denom = denom * _sqrt_to_sqrt10(lc_inv_var)
    if s % 2:
        denom = denom * _sqrt_to_sqrt10(lc_foot_var)
    return Sqrt10Value(m_rs.leading_coefficient) / denom


@functools.lru_cache(maxsize=None)
def binormal_moment(r: int, s: int) -> Sqrt10Value:
    """E[X**r Y**s] for the standard binormal with correlation 3/sqrt(10).

    Zero whenever r + s is odd; (r-1)!! on the marginals.
    """
    if r < 0 or s < 0:
        return Sqrt10Value(Fraction(0))
    if r == 0 and s == 0:
        return Sqrt10Value(Fraction(1))
    if r >= 1:
        value = (r - 1) * binormal_moment(r - 2, s)
        if s:
            value = value + s * (RHO * binormal_moment(r - 1, s - 1))
        return value
    return (s - 1) * binormal_moment(0, s - 2)
