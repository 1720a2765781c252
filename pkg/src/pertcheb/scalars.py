"""Exact scalar layer: rationals, one-parameter affine forms, quadratic extensions.

Rationals are ``fractions.Fraction`` throughout (always reduced, positive
denominator, zero is 0/1).  An :class:`AffineScalar` is ``const + lin * p``
for a single formal parameter ``p``; products of two scalars with nonzero
linear parts are rejected, which keeps every quantity in the package exactly
degree <= 1 in the perturbation parameter.  A :class:`QuadExt` is
``a + b * sqrt(rad)`` and supports exact sign decisions against rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import AffineOverflow, MixedRadicand

RationalLike = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    """Serialize a rational as 'num/den' (denominator always explicit)."""
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    return to_fraction(text)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if q < 0:
        raise ValueError("square root of a negative rational")
    if q == 0:
        return Fraction(0)
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


@dataclass(frozen=True)
class AffineScalar:
    """Exact scalar of the form const + lin * p for one formal parameter p."""

    const: Fraction
    lin: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "const", to_fraction(self.const))
        object.__setattr__(self, "lin", to_fraction(self.lin))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def of(value: RationalLike | "AffineScalar") -> "AffineScalar":
        if isinstance(value, AffineScalar):
            return value
        return AffineScalar(to_fraction(value))

    @staticmethod
    def formal() -> "AffineScalar":
        """The bare formal parameter p."""
        return AffineScalar(Fraction(0), Fraction(1))

    # -- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.lin == 0

    def rational_value(self) -> Fraction:
        if self.lin != 0:
            raise ValueError(f"{self} still carries the formal parameter")
        return self.const

    def __bool__(self) -> bool:
        return self.const != 0 or self.lin != 0

    # -- field-ish arithmetic ----------------------------------------------

    def __add__(self, other) -> "AffineScalar":
        other = AffineScalar.of(other)
        return AffineScalar(self.const + other.const, self.lin + other.lin)

    __radd__ = __add__

    def __neg__(self) -> "AffineScalar":
        return AffineScalar(-self.const, -self.lin)

    def __sub__(self, other) -> "AffineScalar":
        return self + (-AffineScalar.of(other))

    def __rsub__(self, other) -> "AffineScalar":
        return AffineScalar.of(other) + (-self)

    def __mul__(self, other) -> "AffineScalar":
        other = AffineScalar.of(other)
        if self.lin != 0 and other.lin != 0:
            raise AffineOverflow(
                f"product {self} * {other} leaves the affine layer"
            )
        if other.lin == 0:
            return AffineScalar(self.const * other.const, self.lin * other.const)
        return AffineScalar(self.const * other.const, self.const * other.lin)

    __rmul__ = __mul__

    def scale(self, q: RationalLike) -> "AffineScalar":
        q = to_fraction(q)
        return AffineScalar(self.const * q, self.lin * q)

    def instantiate(self, value: RationalLike) -> Fraction:
        """Evaluate at a concrete parameter value, exactly."""
        return self.const + self.lin * to_fraction(value)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"const": format_rational(self.const), "lin": format_rational(self.lin)}

    @staticmethod
    def from_json(data: dict) -> "AffineScalar":
        return AffineScalar(parse_rational(data["const"]), parse_rational(data["lin"]))

    def __repr__(self) -> str:
        if self.lin == 0:
            return str(self.const)
        if self.const == 0:
            return f"{self.lin}*p"
        return f"{self.const}{'+' if self.lin > 0 else ''}{self.lin}*p"


AFF_ZERO = AffineScalar(Fraction(0))
AFF_ONE = AffineScalar(Fraction(1))


@dataclass(frozen=True)
class Interval:
    """Closed interval with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", to_fraction(self.lo))
        object.__setattr__(self, "hi", to_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @staticmethod
    def point(q: RationalLike) -> "Interval":
        q = to_fraction(q)
        return Interval(q, q)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, q: RationalLike) -> bool:
        q = to_fraction(q)
        return self.lo <= q <= self.hi

    def sign(self) -> int | None:
        """-1/0/+1 when decidable; None when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == 0 == self.hi:
            return 0
        return None

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: "Interval") -> "Interval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    def scale(self, q: RationalLike) -> "Interval":
        q = to_fraction(q)
        if q >= 0:
            return Interval(self.lo * q, self.hi * q)
        return Interval(self.hi * q, self.lo * q)

    def shift(self, q: RationalLike) -> "Interval":
        q = to_fraction(q)
        return Interval(self.lo + q, self.hi + q)

    def round_dyadic(self, bits: int) -> "Interval":
        """Round outward to endpoints with denominator 2**bits."""
        scale = 1 << bits
        lo = Fraction(math.floor(self.lo * scale), scale)
        hi = Fraction(math.ceil(self.hi * scale), scale)
        return Interval(lo, hi)

    def __float__(self) -> float:
        return float((self.lo + self.hi) / 2)


@dataclass(frozen=True)
class QuadExt:
    """Exact value a + b*sqrt(radicand) with rational a, b and radicand >= 0.

    One radicand is fixed per computation context; mixing two irrational
    radicands in arithmetic or comparisons raises :class:`MixedRadicand`.
    """

    a: Fraction
    b: Fraction = Fraction(0)
    radicand: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", to_fraction(self.a))
        object.__setattr__(self, "b", to_fraction(self.b))
        object.__setattr__(self, "radicand", to_fraction(self.radicand))
        if self.radicand < 0:
            raise ValueError("radicand must be nonnegative")
        # collapse exact square roots and zero coefficients to pure rationals
        if self.b != 0:
            root = rational_sqrt(self.radicand)
            if root is not None:
                object.__setattr__(self, "a", self.a + self.b * root)
                object.__setattr__(self, "b", Fraction(0))
        if self.b == 0:
            object.__setattr__(self, "radicand", Fraction(0))

    @staticmethod
    def of(value: RationalLike | "QuadExt") -> "QuadExt":
        if isinstance(value, QuadExt):
            return value
        return QuadExt(to_fraction(value))

    @staticmethod
    def sqrt(q: RationalLike, radicand: RationalLike | None = None) -> "QuadExt":
        """Exact sqrt(q): rational when q is a perfect square, else c*sqrt(radicand).

        When ``radicand`` is given, the result is expressed over it, which
        requires q/radicand to be a perfect rational square.
        """
        q = to_fraction(q)
        if q < 0:
            raise ValueError("sqrt of a negative rational")
        root = rational_sqrt(q)
        if root is not None:
            return QuadExt(root)
        rad = q if radicand is None else to_fraction(radicand)
        ratio = rational_sqrt(q / rad) if rad > 0 else None
        if ratio is None:
            raise MixedRadicand(f"sqrt({q}) is not expressible over sqrt({rad})")
        return QuadExt(Fraction(0), ratio, rad)

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def _common_radicand(self, other: "QuadExt") -> Fraction:
        if self.b == 0:
            return other.radicand
        if other.b == 0:
            return self.radicand
        if self.radicand != other.radicand:
            raise MixedRadicand(
                f"radicands differ: {self.radicand} vs {other.radicand}"
            )
        return self.radicand

    def __add__(self, other) -> "QuadExt":
        other = QuadExt.of(other)
        rad = self._common_radicand(other)
        return QuadExt(self.a + other.a, self.b + other.b, rad)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.a, -self.b, self.radicand)

    def __sub__(self, other) -> "QuadExt":
        return self + (-QuadExt.of(other))

    def __rsub__(self, other) -> "QuadExt":
        return QuadExt.of(other) + (-self)

    def scale(self, q: RationalLike) -> "QuadExt":
        q = to_fraction(q)
        return QuadExt(self.a * q, self.b * q, self.radicand)

    def sign(self) -> int:
        """Exact sign of a + b*sqrt(radicand); no floating point involved."""
        if self.b == 0:
            return (self.a > 0) - (self.a < 0)
        root_term_sign = 1 if self.b > 0 else -1
        if self.a == 0:
            return root_term_sign
        a_sign = 1 if self.a > 0 else -1
        if a_sign == root_term_sign:
            return a_sign
        # opposite signs: compare |a| against |b|*sqrt(radicand) by squaring
        lhs = self.a * self.a
        rhs = self.b * self.b * self.radicand
        if lhs == rhs:
            return 0
        return a_sign if lhs > rhs else root_term_sign

    def compare(self, other) -> int:
        return (self - QuadExt.of(other)).sign()

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(float(self.radicand))

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "rad": format_rational(self.radicand),
        }

    @staticmethod
    def from_json(data: dict) -> "QuadExt":
        return QuadExt(
            parse_rational(data["a"]),
            parse_rational(data["b"]),
            parse_rational(data["rad"]),
        )

    def __repr__(self) -> str:
        if self.b == 0:
            return str(self.a)
        tail = f"{self.b}*sqrt({self.radicand})"
        if self.a == 0:
            return tail
        return f"{self.a}{'+' if self.b > 0 else ''}{tail}"


def quad_compare(x: QuadExt, q: RationalLike) -> int:
    """Exact three-way comparison of a quadratic-extension value and a rational."""
    return x.compare(to_fraction(q))
