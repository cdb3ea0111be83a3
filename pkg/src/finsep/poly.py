"""Dense univariate polynomials over Z and over Q, with exact arithmetic.

Coefficients are stored ascending by degree with no trailing zeros, so the
zero polynomial is the empty coefficient tuple.  ``IntPoly`` holds plain
ints, ``RatPoly`` holds ``fractions.Fraction``; both are immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .intarith import gcd_list, lcm_list


class ZeroPolynomialError(ValueError):
    """Raised when a nonzero polynomial was required."""


class PolynomialDivisionError(ZeroDivisionError):
    """Raised on division by the zero polynomial."""


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return tuple(coeffs)


class IntPoly:
    """Polynomial with integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _trim(int(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @staticmethod
    def zero() -> "IntPoly":
        return IntPoly()

    @staticmethod
    def term(coeff: int, degree: int) -> "IntPoly":
        """The monomial coeff * x**degree."""
        return IntPoly([0] * degree + [coeff])

    @staticmethod
    def x() -> "IntPoly":
        return IntPoly((0, 1))

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        """Leading coefficient (0 for the zero polynomial)."""
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def __getitem__(self, degree: int) -> int:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("IntPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def scale(self, k: int) -> "IntPoly":
        return IntPoly(k * c for c in self.coeffs)

    def shift(self, degrees: int) -> "IntPoly":
        """Multiply by x**degrees."""
        if self.is_zero():
            return self
        return IntPoly((0,) * degrees + self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def content(self) -> int:
        """Nonnegative gcd of the coefficients (0 for the zero polynomial)."""
        return gcd_list(self.coeffs)

    def evaluate(self, point: int) -> int:
        out = 0
        for c in reversed(self.coeffs):
            out = out * point + c
        return out

    def divides(self, other: "IntPoly") -> bool:
        """Exact divisibility in Z[x]."""
        if self.is_zero():
            return other.is_zero()
        q, r = divrem_q(other.to_rational(), self.to_rational())
        return r.is_zero() and all(c.denominator == 1 for c in q.coeffs)

    def to_rational(self) -> "RatPoly":
        return RatPoly(Fraction(c) for c in self.coeffs)

    def __repr__(self):
        return f"IntPoly({format_poly(self)!r})"


class RatPoly:
    """Polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(
            self, "coeffs", _trim(Fraction(c) for c in coeffs)
        )

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @staticmethod
    def zero() -> "RatPoly":
        return RatPoly()

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, degree: int) -> Fraction:
        return self.coeffs[degree] if 0 <= degree < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("RatPoly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other: "RatPoly") -> "RatPoly":
        return self + (-other)

    def __mul__(self, other: "RatPoly") -> "RatPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return RatPoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return RatPoly(out)

    def scale(self, k) -> "RatPoly":
        k = Fraction(k)
        return RatPoly(k * c for c in self.coeffs)

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def to_integer(self) -> IntPoly:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self!r}")
        return IntPoly(c.numerator for c in self.coeffs)

    def __repr__(self):
        return f"RatPoly({format_poly(self)!r})"


@dataclass(frozen=True)
class ContentSplit:
    """A nonzero integer polynomial as content * primitive part.

    The content is the positive gcd of the coefficients; the primitive
    part keeps the sign of the original leading coefficient.
    """

    content: int
    primitive: IntPoly


def content_split(p: IntPoly) -> ContentSplit:
    """Split p != 0 into its positive content and primitive part."""
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no content split")
    d = p.content
    return ContentSplit(d, IntPoly(c // d for c in p.coeffs))


def divrem_q(num: RatPoly, den: RatPoly) -> tuple[RatPoly, RatPoly]:
    """Division with remainder in Q[x]: num = den*q + r with deg r < deg den."""
    if den.is_zero():
        raise PolynomialDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(num.degree - den.degree + 1, 0)
    rem = list(num.coeffs)
    dlead = den.lead
    ddeg = den.degree
    for i in range(len(rem) - 1, ddeg - 1, -1):
        if not rem[i]:
            continue
        c = rem[i] / dlead
        q[i - ddeg] = c
        for j, dc in enumerate(den.coeffs):
            rem[i - ddeg + j] -= c * dc
    return RatPoly(q), RatPoly(rem)


def xgcd_q(a: RatPoly, b: RatPoly) -> tuple[RatPoly, RatPoly, RatPoly]:
    """Extended Euclid in Q[x]: returns (g, s, t) with s*a + t*b = g, g monic or 0."""
    r0, r1 = a, b
    s0, s1 = RatPoly((1,)), RatPoly()
    t0, t1 = RatPoly(), RatPoly((1,))
    while not r1.is_zero():
        q, r = divrem_q(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if not r0.is_zero() and r0.lead != 1:
        inv = 1 / r0.lead
        r0, s0, t0 = r0.scale(inv), s0.scale(inv), t0.scale(inv)
    return r0, s0, t0


@dataclass(frozen=True)
class RationalGcd:
    """Monic gcd over Q of a family of integer polynomials, with evidence.

    ``cofactors`` satisfy sum(cofactors[i] * inputs[i]) == gamma exactly, and
    ``denominator_lcm`` (the paper-side l) clears every cofactor denominator,
    so denominator_lcm * gamma is an all-integer combination of the inputs.
    """

    gamma: RatPoly
    cofactors: tuple[RatPoly, ...]
    denominator_lcm: int


def gcd_q(polys) -> RationalGcd:
    """Monic rational gcd of integer polynomials with Bezout cofactors."""
    polys = list(polys)
    if not any(not p.is_zero() for p in polys):
        raise ZeroPolynomialError("gcd_q needs at least one nonzero polynomial")
    gamma = RatPoly()
    cofactors = [RatPoly() for _ in polys]
    for i, p in enumerate(polys):
        if p.is_zero():
            continue
        pq = p.to_rational()
        if gamma.is_zero():
            inv = 1 / pq.lead
            gamma = pq.scale(inv)
            cofactors[i] = RatPoly((inv,))
            continue
        g, s, t = xgcd_q(gamma, pq)
        cofactors = [s * c for c in cofactors]
        cofactors[i] = cofactors[i] + t
        gamma = g
    denoms = [c.denominator for cof in cofactors for c in cof.coeffs]
    l = lcm_list(denoms) if denoms else 1
    return RationalGcd(gamma, tuple(cofactors), l)


def compose(outer: IntPoly, inner: IntPoly) -> IntPoly:
    """Exact composition outer(inner(x)) by Horner over Z[x]."""
    out = IntPoly()
    for c in reversed(outer.coeffs):
        out = out * inner + IntPoly((c,))
    return out


def evaluate_in_ring(p: IntPoly, point, ring):
    """Evaluate p (zero constant term) at a ring element by Horner.

    The ring context must provide zero(), add(u, v), mul(u, v) and
    int_scale(k, u); no ring unit is needed because p has no constant term.
    """
    if p.constant != 0:
        raise ValueError("ring evaluation needs a zero constant term")
    out = ring.zero()
    for d in range(p.degree, 0, -1):
        out = ring.mul(out, point)
        c = p[d]
        if c:
            out = ring.add(out, ring.int_scale(c, point))
    return out


def format_poly(p) -> str:
    """Canonical text form: descending degree, '^' powers, e.g. '2x^3 - 4x'."""
    if p.is_zero():
        return "0"
    parts = []
    for d in range(p.degree, -1, -1):
        c = p[d]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if d == 0:
            body = _format_coeff(mag)
        elif mag == 1:
            body = "x" if d == 1 else f"x^{d}"
        else:
            body = f"{_format_coeff(mag)}x" + ("" if d == 1 else f"^{d}")
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def _format_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"({c.numerator}/{c.denominator})"
    return str(int(c))
