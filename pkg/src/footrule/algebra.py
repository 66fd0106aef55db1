"""Exact polynomial arithmetic over arbitrary-precision integers and rationals.

Three small polynomial types cover everything the library needs:

* ``UniPoly`` -- sparse univariate polynomial with integer coefficients,
  used for weight enumerators such as the footrule distribution of S_n.
* ``BiPoly`` -- sparse bivariate polynomial in (p, q) with integer
  coefficients, used for joint (inversions, footrule) enumerators.
* ``RatPoly`` -- dense univariate polynomial in the symbol n with
  ``Fraction`` coefficients, used for fitted closed-form moment formulas.

There is no floating point anywhere: coefficients are Python ints,
rationals are ``fractions.Fraction`` (always in lowest terms, positive
denominator).  ``lagrange_fit`` interpolates exactly and validates the
result on held-out guard points, so a returned polynomial is an identity
on every point it was shown, not an approximation.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


def fraction_to_str(x: Fraction) -> str:
    """Serialize a rational as ``"num/den"`` in lowest terms."""
    return f"{x.numerator}/{x.denominator}"


def fraction_from_str(text: str) -> Fraction:
    num, _, den = text.partition("/")
    if not den:
        return Fraction(int(num))
    return Fraction(int(num), int(den))


class UniPoly:
    """Sparse univariate polynomial with int coefficients.

    Terms are stored as {exponent: coefficient} with no zero entries; the
    zero polynomial has an empty term map.  The variable tag (default
    ``"q"``) is part of the value: operating on polynomials with different
    tags raises ``ValueError``.

    >>> f = UniPoly({0: 1, 2: 2, 4: 3})
    >>> f.to_text()
    '1+2*q^2+3*q^4'
    >>> f.evaluate(1)
    6
    """

    __slots__ = ("var", "terms")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (),
                 var: str = "q"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for exp, coeff in items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
                if not clean[exp]:
                    del clean[exp]
        self.var = var
        self.terms = clean

    @classmethod
    def zero(cls, var: str = "q") -> "UniPoly":
        return cls((), var)

    @classmethod
    def one(cls, var: str = "q") -> "UniPoly":
        return cls({0: 1}, var)

    @classmethod
    def monomial(cls, coeff: int, exp: int, var: str = "q") -> "UniPoly":
        return cls({exp: coeff}, var)

    def _check_var(self, other: "UniPoly") -> None:
        if self.var != other.var:
            raise ValueError(
                f"variable-tag mismatch: {self.var!r} vs {other.var!r}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.var == other.var and self.terms == other.terms

    __hash__ = None  # mutable mapping inside

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_var(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        return UniPoly(out, self.var)

    def __neg__(self) -> "UniPoly":
        return UniPoly({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly | int") -> "UniPoly":
        if isinstance(other, int):
            if not other:
                return UniPoly.zero(self.var)
            return UniPoly({e: c * other for e, c in self.terms.items()}, self.var)
        self._check_var(other)
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly.one(self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shifted(self, d: int) -> "UniPoly":
        """Multiply by var**d (d >= 0)."""
        if d < 0:
            raise ValueError("negative shift")
        return UniPoly({e + d: c for e, c in self.terms.items()}, self.var)

    @property
    def degree(self) -> int:
        """Degree, or -1 for the zero polynomial."""
        return max(self.terms) if self.terms else -1

    def coefficient(self, exp: int) -> int:
        return self.terms.get(exp, 0)

    def evaluate(self, x):
        """Exact value at x (int or Fraction in, same domain out)."""
        return sum(c * x ** e for e, c in self.terms.items())

    def items_sorted(self) -> list[tuple[int, int]]:
        return sorted(self.terms.items())

    def to_text(self) -> str:
        """Canonical ASCII form, terms in ascending exponent order."""
        return _terms_to_text(
            [(c, _power_text(self.var, e)) for e, c in self.items_sorted()])

    def to_json_obj(self) -> dict:
        return {"var": self.var,
                "terms": [[e, str(c)] for e, c in self.items_sorted()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "UniPoly":
        return cls({int(e): int(c) for e, c in obj["terms"]}, obj["var"])

    def __repr__(self) -> str:
        return f"UniPoly({self.to_text()!r}, var={self.var!r})"


class BiPoly:
    """Sparse polynomial in (p, q) with int coefficients.

    Serialization order is graded lexicographic: by total degree
    e_p + e_q, then by e_p.
    """

    __slots__ = ("terms",)
    VARS = ("p", "q")

    def __init__(self, terms: Mapping[tuple[int, int], int] |
                 Iterable[tuple[tuple[int, int], int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[tuple[int, int], int] = {}
        for key, coeff in items:
            ep, eq = key
            if ep < 0 or eq < 0:
                raise ValueError(f"negative exponent in {key}")
            if coeff:
                k = (ep, eq)
                clean[k] = clean.get(k, 0) + coeff
                if not clean[k]:
                    del clean[k]
        self.terms = clean

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls(())

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "BiPoly") -> "BiPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return BiPoly(out)

    def __neg__(self) -> "BiPoly":
        return BiPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "BiPoly") -> "BiPoly":
        return self + (-other)

    def __mul__(self, other: "BiPoly | int") -> "BiPoly":
        if isinstance(other, int):
            if not other:
                return BiPoly.zero()
            return BiPoly({k: c * other for k, c in self.terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a, b), c1 in self.terms.items():
            for (d, e), c2 in other.terms.items():
                k = (a + d, b + e)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return BiPoly(out)

    __rmul__ = __mul__

    @property
    def degree_p(self) -> int:
        return max((ep for ep, _ in self.terms), default=-1)

    @property
    def degree_q(self) -> int:
        return max((eq for _, eq in self.terms), default=-1)

    def evaluate(self, pv, qv):
        return sum(c * pv ** ep * qv ** eq for (ep, eq), c in self.terms.items())

    def substitute_p(self, value: int) -> UniPoly:
        """Set p = value, leaving a polynomial in q."""
        out: dict[int, int] = {}
        for (ep, eq), c in self.terms.items():
            s = out.get(eq, 0) + c * value ** ep
            if s:
                out[eq] = s
            elif eq in out:
                del out[eq]
        return UniPoly(out, "q")

    def substitute_q(self, value: int) -> UniPoly:
        """Set q = value, leaving a polynomial in p."""
        out: dict[int, int] = {}
        for (ep, eq), c in self.terms.items():
            s = out.get(ep, 0) + c * value ** eq
            if s:
                out[ep] = s
            elif ep in out:
                del out[ep]
        return UniPoly(out, "p")

    def items_graded(self) -> list[tuple[tuple[int, int], int]]:
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0] + kv[0][1], kv[0][0]))

    def to_text(self) -> str:
        parts = []
        for (ep, eq), c in self.items_graded():
            mono = "*".join(t for t in (_power_text("p", ep),
                                        _power_text("q", eq)) if t)
            parts.append((c, mono))
        return _terms_to_text(parts)

    def to_json_obj(self) -> dict:
        return {"vars": list(self.VARS),
                "terms": [[ep, eq, str(c)] for (ep, eq), c in self.items_graded()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "BiPoly":
        return cls({(int(ep), int(eq)): int(c) for ep, eq, c in obj["terms"]})

    def __repr__(self) -> str:
        return f"BiPoly({self.to_text()!r})"


class RatPoly:
    """Dense polynomial in the symbol n with Fraction coefficients."""

    __slots__ = ("coeffs",)
    VAR = "n"

    def __init__(self, coeffs: Iterable[Fraction | int] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def variable(cls) -> "RatPoly":
        """The polynomial n itself."""
        return cls((0, 1))

    @classmethod
    def constant(cls, value: Fraction | int) -> "RatPoly":
        return cls((value,))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other: "RatPoly | Fraction | int") -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            other = RatPoly.constant(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RatPoly | Fraction | int") -> "RatPoly":
        return self + (-other if isinstance(other, RatPoly)
                       else RatPoly.constant(-Fraction(other)))

    def __rsub__(self, other: "Fraction | int") -> "RatPoly":
        return RatPoly.constant(other) + (-self)

    def __mul__(self, other: "RatPoly | Fraction | int") -> "RatPoly":
        if isinstance(other, (int, Fraction)):
            return RatPoly(tuple(c * other for c in self.coeffs))
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar: Fraction | int) -> "RatPoly":
        return self * (Fraction(1) / Fraction(scalar))

    def __pow__(self, k: int) -> "RatPoly":
        if k < 0:
            raise ValueError("negative power")
        result = RatPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_text(self) -> str:
        parts = []
        for e, c in enumerate(self.coeffs):
            if c:
                parts.append((c, _power_text(self.VAR, e)))
        return _terms_to_text(parts)

    def to_json_obj(self) -> dict:
        return {"var": self.VAR,
                "coefficients": [fraction_to_str(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RatPoly":
        return cls(fraction_from_str(c) for c in obj["coefficients"])

    def __repr__(self) -> str:
        return f"RatPoly({self.to_text()!r})"


def _power_text(var: str, exp: int) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return var
    return f"{var}^{exp}"


def _coeff_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def _terms_to_text(parts: list[tuple]) -> str:
    """Join (coefficient, monomial-text) pairs into '1+2*q^2' style text."""
    if not parts:
        return "0"
    pieces = []
    for i, (c, mono) in enumerate(parts):
        neg = c < 0
        mag = -c if neg else c
        if mono and mag == 1:
            body = mono
        elif mono:
            body = f"{_coeff_text(mag)}*{mono}"
        else:
            body = _coeff_text(mag)
        if i == 0:
            pieces.append(("-" if neg else "") + body)
        else:
            pieces.append(("-" if neg else "+") + body)
    return "".join(pieces)


class GuardPointMismatch(ValueError):
    """An interpolated polynomial failed to reproduce a held-out point.

    Signals a wrong degree bound or data that is not yet polynomial on
    the window (a validity-threshold issue).  Carries the first failing
    abscissa and both values.
    """

    def __init__(self, n: int, expected: Fraction, actual: Fraction):
        super().__init__(
            f"guard-point mismatch at n={n}: data {expected}, fit {actual}")
        self.n = n
        self.expected = expected
        self.actual = actual


def _newton_interpolate(points: list[tuple[int, Fraction]]) -> RatPoly:
    """Unique polynomial of degree < len(points) through the given points."""
    xs = [Fraction(x) for x, _ in points]
    col = [Fraction(y) for _, y in points]
    dd = [col[0]]
    for j in range(1, len(points)):
        col = [(col[i + 1] - col[i]) / (xs[i + j] - xs[i])
               for i in range(len(col) - 1)]
        dd.append(col[0])
    # expand the Newton form ((x - x0)(x - x1)... nesting) to monomials
    poly = RatPoly((dd[-1],))
    for i in range(len(dd) - 2, -1, -1):
        poly = poly * RatPoly((-xs[i], 1)) + dd[i]
    return poly


def lagrange_fit(points: Iterable[tuple[int, Fraction]],
                 degree_bound: int,
                 guard_count: int) -> RatPoly:
    """Exact interpolation with held-out validation.

    Interpolates the first ``degree_bound + 1`` points by the unique
    polynomial of degree <= degree_bound, then requires exact equality at
    every remaining point.  At least ``guard_count`` (>= 1) points must
    remain to act as guards.

    Raises ``GuardPointMismatch`` on the first failing guard and
    ``ValueError`` on malformed input (too few points, repeated
    abscissas).
    """
    pts = [(int(x), Fraction(y)) for x, y in points]
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    if guard_count < 1:
        raise ValueError("guard_count must be >= 1")
    if len(pts) < degree_bound + 1 + guard_count:
        raise ValueError(
            f"need at least {degree_bound + 1 + guard_count} points, got {len(pts)}")
    if len({x for x, _ in pts}) != len(pts):
        raise ValueError("abscissas must be distinct")
    nodes, guards = pts[:degree_bound + 1], pts[degree_bound + 1:]
    poly = _newton_interpolate(nodes)
    for x, y in guards:
        got = poly.evaluate(x)
        if got != y:
            raise GuardPointMismatch(x, y, got)
    return poly
