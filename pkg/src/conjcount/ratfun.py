"""Exact univariate rational functions over Q and their partial fractions.

Coefficients are `fractions.Fraction` throughout; nothing here touches
floats. A rational function is kept in canonical form (numerator and
denominator coprime, denominator constant term 1), so equality of values
is structural equality. The partial-fraction machinery targets the pole
family 1/(1 - m*t) with distinct positive integers m, which is the shape
every group-derived generating function has.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotSimpleIntegerPoles


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; coefficients[i] multiplies t**i, no trailing zeros."""

    coefficients: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> "Polynomial":
        return Polynomial(_trim(tuple(_frac(c) for c in coeffs)))

    @property
    def degree(self):
        """Degree, with -inf for the zero polynomial."""
        return len(self.coefficients) - 1 if self.coefficients else -math.inf

    def is_zero(self) -> bool:
        return not self.coefficients

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(_trim(tuple(out)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coefficients))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return ZERO_POLY
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(_trim(tuple(out)))

    def scaled(self, c) -> "Polynomial":
        c = _frac(c)
        if c == 0:
            return ZERO_POLY
        return Polynomial(tuple(c * x for x in self.coefficients))

    def substituted_scale(self, c) -> "Polynomial":
        """p(c*t): multiply coefficient i by c**i."""
        c = _frac(c)
        return Polynomial(_trim(tuple(x * c**i for i, x in enumerate(self.coefficients))))


def _trim(coeffs: tuple[Fraction, ...]) -> tuple[Fraction, ...]:
    k = len(coeffs)
    while k and coeffs[k - 1] == 0:
        k -= 1
    return coeffs[:k]


ZERO_POLY = Polynomial(())
ONE_POLY = Polynomial((Fraction(1),))


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a.coefficients)
    db = len(b.coefficients) - 1
    lead = b.coefficients[-1]
    quot = [Fraction(0)] * max(0, len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] / lead
        if c:
            quot[i - db] = c
            for j, bc in enumerate(b.coefficients):
                rem[i - db + j] -= c * bc
    return Polynomial(_trim(tuple(quot))), Polynomial(_trim(tuple(rem)))


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, poly_divmod(a, b)[1]
    if a.is_zero():
        return a
    return a.scaled(1 / a.coefficients[-1])


@dataclass(frozen=True)
class RationalFunction:
    """num/den in canonical form: gcd(num, den) = 1 and den(0) = 1."""

    num: Polynomial
    den: Polynomial

    @staticmethod
    def make(num: Polynomial, den: Polynomial) -> "RationalFunction":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not g.is_zero() and g.degree > 0:
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
        c0 = den(Fraction(0))
        if c0 == 0:
            raise ZeroDivisionError("denominator vanishes at t=0")
        if c0 != 1:
            num = num.scaled(1 / c0)
            den = den.scaled(1 / c0)
        return RationalFunction(num, den)

    @staticmethod
    def constant(c) -> "RationalFunction":
        return RationalFunction(Polynomial.of(c), ONE_POLY)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction.make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction.make(self.num * other.den, self.den * other.num)

    def __call__(self, x: Fraction) -> Fraction:
        return self.num(x) / self.den(x)


ZERO = RationalFunction(ZERO_POLY, ONE_POLY)
ONE = RationalFunction(ONE_POLY, ONE_POLY)


def simple_term(c, pole) -> RationalFunction:
    """c / (1 - pole*t) for exact rationals c and pole."""
    return RationalFunction.make(Polynomial.of(c), Polynomial.of(1, -_frac(pole)))


def eq(r1: RationalFunction, r2: RationalFunction) -> bool:
    """Equality of rational functions (canonical forms are unique)."""
    return r1 == r2


def scale_variable(r: RationalFunction, c) -> RationalFunction:
    """The substitution t -> c*t, exactly."""
    return RationalFunction.make(r.num.substituted_scale(c), r.den.substituted_scale(c))


def series_coeffs(r: RationalFunction, count: int):
    """First `count` Taylor coefficients at 0, via the denominator recurrence."""
    den = r.den.coefficients
    assert den and den[0] == 1
    num = r.num.coefficients
    out: list[Fraction] = []
    for n in range(count):
        acc = num[n] if n < len(num) else Fraction(0)
        for k in range(1, min(n, len(den) - 1) + 1):
            acc -= den[k] * out[n - k]
        out.append(acc)
    return out


@dataclass(frozen=True)
class PartialFraction:
    """Sum of residue/(1 - m*t) terms, m distinct positive integers, sorted descending."""

    terms: tuple[tuple[Fraction, int], ...]

    def __post_init__(self):
        ms = [m for _, m in self.terms]
        assert ms == sorted(ms, reverse=True)
        assert len(set(ms)) == len(ms)
        assert all(m >= 1 for m in ms)
        assert all(c != 0 for c, _ in self.terms)

    @staticmethod
    def of(pairs) -> "PartialFraction":
        terms = tuple(
            (_frac(c), int(m)) for c, m in sorted(pairs, key=lambda cm: -cm[1]) if c != 0
        )
        return PartialFraction(terms)

    def to_rational(self) -> RationalFunction:
        acc = ZERO
        for c, m in self.terms:
            acc = acc + simple_term(c, m)
        return acc

    def residue_at(self, m: int) -> Fraction:
        for c, mm in self.terms:
            if mm == m:
                return c
        return Fraction(0)

    @property
    def dominant_pole(self) -> int:
        return self.terms[0][1]


def from_partial_fractions(pf: PartialFraction) -> RationalFunction:
    return pf.to_rational()


def to_partial_fractions(r: RationalFunction, pole_divisor: int | None = None) -> PartialFraction:
    """Decompose over the pole family 1/(1 - m*t).

    Requires the denominator to factor as a product of distinct (1 - m*t)
    with positive integers m, and the function to be proper. When
    `pole_divisor` is given (the ambient group order), every m found must
    divide it.
    """
    num, den = r.num, r.den
    if den.degree == 0:
        if num.is_zero():
            return PartialFraction(())
        raise NotSimpleIntegerPoles("nonzero constant has no pole decomposition")
    if num.degree >= den.degree:
        raise NotSimpleIntegerPoles(
            f"not a proper rational function (degrees {num.degree} >= {den.degree})"
        )
    for c in den.coefficients:
        if c.denominator != 1:
            raise NotSimpleIntegerPoles(f"denominator coefficient {c} is not an integer")
    # den = prod(1 - m_i t) iff the reversed polynomial t^d * den(1/t) is
    # monic with roots exactly the m_i; integer roots divide its constant
    # term, i.e. the leading coefficient of den.
    lead = int(den.coefficients[-1])
    poles = [m for m in _divisors(abs(lead)) if den(Fraction(1, m)) == 0]
    if len(poles) != den.degree:
        raise NotSimpleIntegerPoles(
            f"denominator is not a product of distinct integer-pole factors: {den.coefficients}"
        )
    if pole_divisor is not None:
        for m in poles:
            assert pole_divisor % m == 0, f"pole parameter {m} does not divide {pole_divisor}"
    terms = []
    for m in poles:
        x = Fraction(1, m)
        rest = Fraction(1)
        for m2 in poles:
            if m2 != m:
                rest *= 1 - Fraction(m2, m)
        terms.append((num(x) / rest, m))
    pf = PartialFraction.of(terms)
    assert pf.to_rational() == r
    return pf


def _divisors(n: int) -> list[int]:
    out = []
    for d in range(1, int(math.isqrt(n)) + 1):
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
    return sorted(out)


# ---------------------------------------------------------------------------
# text rendering (round-trip parseable)

def format_polynomial(coeffs: list[int]) -> str:
    """Render ascending powers: the power-series reading '1 - 29t + 216t^2'."""
    if not coeffs:
        return "0"
    parts = []
    for i in range(len(coeffs)):
        c = coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            var = "t" if i == 1 else f"t^{i}"
            body = var if mag == 1 else f"{mag}{var}"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def integer_pair(r: RationalFunction):
    """Integer-coefficient (num, den) lists with den's constant term positive."""
    scale = 1
    for c in r.num.coefficients + r.den.coefficients:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    num = [int(c * scale) for c in r.num.coefficients]
    den = [int(c * scale) for c in r.den.coefficients]
    g = 0
    for c in num + den:
        g = math.gcd(g, c)
    if g > 1:
        num = [c // g for c in num]
        den = [c // g for c in den]
    if den and den[0] < 0:
        num = [-c for c in num]
        den = [-c for c in den]
    return num, den


def format_rational(r: RationalFunction) -> str:
    num, den = integer_pair(r)
    return f"({format_polynomial(num)})/({format_polynomial(den)})"


_TERM_RE = re.compile(r"([+-])?\s*(\d+)?\s*(t(?:\^(\d+))?)?")


def parse_polynomial(text: str) -> Polynomial:
    text = text.strip()
    if text == "0":
        return ZERO_POLY
    coeffs: dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse polynomial {text!r} at position {pos}")
        sign, digits, tpart, exp = m.groups()
        if sign is None and not first:
            raise ValueError(f"missing sign in {text!r} at position {pos}")
        coef = int(digits) if digits is not None else 1
        if sign == "-":
            coef = -coef
        if tpart is None:
            power = 0
        else:
            power = int(exp) if exp is not None else 1
        coeffs[power] = coeffs.get(power, 0) + coef
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
        first = False
    top = max(coeffs)
    return Polynomial.of(*[coeffs.get(i, 0) for i in range(top + 1)])


def parse_rational(text: str) -> RationalFunction:
    m = re.fullmatch(r"\s*\((.*)\)\s*/\s*\((.*)\)\s*", text)
    if not m:
        raise ValueError(f"expected '(num)/(den)', got {text!r}")
    return RationalFunction.make(parse_polynomial(m.group(1)), parse_polynomial(m.group(2)))


def format_partial_fractions(pf: PartialFraction) -> str:
    if not pf.terms:
        return "0"
    parts = []
    for c, m in pf.terms:
        tpart = "t" if m == 1 else f"{m}t"
        parts.append(f"({c})/(1 - {tpart})")
    return " + ".join(parts)


def parse_partial_fractions(text: str) -> PartialFraction:
    text = text.strip()
    if text == "0":
        return PartialFraction(())
    terms = []
    for chunk in text.split(" + "):
        m = re.fullmatch(r"\((-?\d+(?:/\d+)?)\)/\(1 - (?:(\d+))?t\)", chunk.strip())
        if not m:
            raise ValueError(f"cannot parse partial-fraction term {chunk!r}")
        res = Fraction(m.group(1))
        pole = int(m.group(2)) if m.group(2) else 1
        terms.append((res, pole))
    return PartialFraction.of(terms)


def format_series(values) -> str:
    return ", ".join(str(v) for v in values)
