"""Recurrence specifications, polynomial generation and Chebyshev closed forms.

Monic sequences are generated exactly by the order-2 recurrence
P_{n+1} = (x - beta_n) P_n - gamma_n P_{n-1}, with the convention that
polynomials, beta and gamma all vanish for negative indices.  The second-kind
family (beta = 0, gamma = 1/4) is the base everything else perturbs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import mpmath

from .errors import InvalidOrder, NonRegular, PrecisionExhausted
from .scalars import AFF_ONE, AFF_ZERO, AffineScalar, Interval, to_fraction

QUARTER = AffineScalar(Fraction(1, 4))

#: hard cap for adaptive interval precision, in bits of target width
PRECISION_CAP_BITS = 4096

CHEBYSHEV_KINDS = ("first", "second", "third", "fourth")


# ---------------------------------------------------------------------------
# recurrence specifications

@dataclass(frozen=True)
class RecurrenceSpec:
    """Coefficient tables (beta_n, gamma_n) of a monic order-2 recurrence.

    ``beta_overrides`` maps n -> beta_n and ``gamma_overrides`` maps
    i -> gamma_i (i >= 1); indices not present take the family defaults.
    """

    label: str
    beta_default: AffineScalar = AFF_ZERO
    gamma_default: AffineScalar = QUARTER
    beta_overrides: tuple[tuple[int, AffineScalar], ...] = ()
    gamma_overrides: tuple[tuple[int, AffineScalar], ...] = ()

    def beta(self, n: int) -> AffineScalar:
        if n < 0:
            return AFF_ZERO
        for idx, value in self.beta_overrides:
            if idx == n:
                return value
        return self.beta_default

    def gamma(self, i: int) -> AffineScalar:
        """gamma_i for i >= 1; zero below."""
        if i < 1:
            return AFF_ZERO
        for idx, value in self.gamma_overrides:
            if idx == i:
                return value
        return self.gamma_default

    @property
    def is_symmetric(self) -> bool:
        if self.beta_default:
            return False
        return all(not value for _, value in self.beta_overrides)

    def require_regular(self, n_max: int) -> None:
        for i in range(1, n_max + 1):
            if not self.gamma(i):
                raise NonRegular(f"{self.label}: gamma_{i} = 0")

    def to_json(self, n_max: int) -> dict:
        return {
            "label": self.label,
            "beta": [self.beta(n).to_json() for n in range(n_max + 1)],
            "gamma": [self.gamma(n + 1).to_json() for n in range(n_max + 1)],
        }


@dataclass(frozen=True)
class PerturbationSpec:
    """One elementary perturbation of a single recurrence coefficient.

    ``kind`` is 'translation' (beta_r += param) or 'dilatation'
    (gamma_r *= param).  ``param`` may be a rational or the formal parameter.
    """

    kind: str
    order: int
    param: AffineScalar | None = None  # None selects the formal parameter

    def __post_init__(self):
        value = (AffineScalar.formal() if self.param is None
                 else AffineScalar.of(self.param))
        object.__setattr__(self, "param", value)
        if self.kind not in ("translation", "dilatation"):
            raise ValueError(f"unknown perturbation kind {self.kind!r}")
        if self.order < 0:
            raise InvalidOrder("perturbation order must be nonnegative")
        if self.kind == "dilatation":
            if self.order < 1:
                raise InvalidOrder("dilatation needs order >= 1")
            if self.param.is_rational and self.param.rational_value() == 0:
                raise NonRegular("dilatation factor 0 destroys regularity")

    @staticmethod
    def translation(order: int, param=None) -> "PerturbationSpec":
        value = AffineScalar.formal() if param is None else AffineScalar.of(param)
        return PerturbationSpec("translation", order, value)

    @staticmethod
    def dilatation(order: int, param=None) -> "PerturbationSpec":
        value = AffineScalar.formal() if param is None else AffineScalar.of(param)
        return PerturbationSpec("dilatation", order, value)

    @property
    def is_formal(self) -> bool:
        return not self.param.is_rational

    def instantiate(self, value) -> "PerturbationSpec":
        return PerturbationSpec(self.kind, self.order, self.param.instantiate(value))


def chebyshev_spec(kind: str) -> RecurrenceSpec:
    """Recurrence coefficients of the four monic Chebyshev families."""
    half = AffineScalar(Fraction(1, 2))
    if kind == "first":
        return RecurrenceSpec("first", gamma_overrides=((1, half),))
    if kind == "second":
        return RecurrenceSpec("second")
    if kind == "third":
        return RecurrenceSpec("third", beta_overrides=((0, half),))
    if kind == "fourth":
        return RecurrenceSpec("fourth", beta_overrides=((0, -half),))
    raise ValueError(f"unknown Chebyshev kind {kind!r}")


def apply_perturbation(base: RecurrenceSpec, pert: PerturbationSpec) -> RecurrenceSpec:
    """Perturb exactly one coefficient of the second-kind base spec."""
    if base.label != "second":
        raise ValueError("perturbations are only supported on the second-kind base")
    if pert.kind == "translation":
        new_beta = base.beta(pert.order) + pert.param
        label = f"second+t(r={pert.order})"
        return RecurrenceSpec(
            label,
            beta_default=base.beta_default,
            gamma_default=base.gamma_default,
            beta_overrides=((pert.order, new_beta),),
            gamma_overrides=base.gamma_overrides,
        )
    new_gamma = pert.param * base.gamma(pert.order)
    label = f"second+d(r={pert.order})"
    return RecurrenceSpec(
        label,
        beta_default=base.beta_default,
        gamma_default=base.gamma_default,
        beta_overrides=base.beta_overrides,
        gamma_overrides=((pert.order, new_gamma),),
    )


def perturbed_spec(pert: PerturbationSpec) -> RecurrenceSpec:
    return apply_perturbation(chebyshev_spec("second"), pert)


# ---------------------------------------------------------------------------
# polynomials

@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial with exact AffineScalar coefficients, ascending degree.

    The zero polynomial stores an empty coefficient tuple (degree -1).
    """

    coeffs: tuple[AffineScalar, ...]

    def __post_init__(self):
        coeffs = tuple(AffineScalar.of(c) for c in self.coeffs)
        while coeffs and not coeffs[-1]:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial(())

    @staticmethod
    def from_coeffs(values: Iterable) -> "Polynomial":
        return Polynomial(tuple(AffineScalar.of(v) for v in values))

    @staticmethod
    def monomial(degree: int, coeff=1) -> "Polynomial":
        return Polynomial(tuple([AFF_ZERO] * degree) + (AffineScalar.of(coeff),))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> AffineScalar:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return AFF_ZERO

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == AFF_ONE

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self.coeff(k) - other.coeff(k) for k in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def scale(self, factor) -> "Polynomial":
        factor = AffineScalar.of(factor)
        return Polynomial(tuple(factor * c for c in self.coeffs))

    def shift_up(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Polynomial(tuple([AFF_ZERO] * k) + self.coeffs)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial.zero()
        out = [AFF_ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(tuple(out))

    def instantiate(self, value) -> "Polynomial":
        value = to_fraction(value)
        return Polynomial(
            tuple(AffineScalar(c.instantiate(value)) for c in self.coeffs)
        )

    def rational_coeffs(self) -> list[Fraction]:
        """Coefficients as plain rationals; fails on formal coefficients."""
        return [c.rational_value() for c in self.coeffs]

    def derivative(self) -> "Polynomial":
        return Polynomial(
            tuple(self.coeffs[k].scale(k) for k in range(1, len(self.coeffs)))
        )

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [c.to_json() for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "Polynomial":
        return Polynomial(tuple(AffineScalar.from_json(c) for c in data["coeffs"]))

    def __repr__(self) -> str:
        if self.is_zero:
            return "Polynomial(0)"
        terms = [f"({c!r})*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(terms) + ")"


def monomial_basis(n_max: int) -> list[Polynomial]:
    return [Polynomial.monomial(m) for m in range(n_max + 1)]


def generate(spec: RecurrenceSpec, n_max: int) -> list[Polynomial]:
    """[P_0, ..., P_n_max] from the three-term recurrence, exactly monic."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    polys = [Polynomial.from_coeffs((1,))]
    if n_max == 0:
        return polys
    polys.append(Polynomial.from_coeffs((-spec.beta(0), 1)))
    for n in range(2, n_max + 1):
        gamma = spec.gamma(n - 1)
        if not gamma:
            raise NonRegular(f"{spec.label}: gamma_{n - 1} = 0")
        beta = spec.beta(n - 1)
        prev, prev2 = polys[n - 1], polys[n - 2]
        next_poly = prev.shift_up(1) - prev.scale(beta) - prev2.scale(gamma)
        polys.append(next_poly)
    return polys


def norm_squared(spec: RecurrenceSpec, n: int) -> AffineScalar:
    """Squared norm k_n = gamma_1 * ... * gamma_n, with k_0 = 1."""
    out = AFF_ONE
    for i in range(1, n + 1):
        gamma = spec.gamma(i)
        if not gamma:
            raise NonRegular(f"{spec.label}: gamma_{i} = 0")
        out = out * gamma
    return out


def evaluate(p: Polynomial, x) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    x = to_fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c.rational_value()
    return acc


# ---------------------------------------------------------------------------
# canonical-basis closed form for the second-kind family

def canonical_cheb_coeff(n: int, m: int) -> Fraction:
    """Coefficient of x^m in the monic second-kind polynomial of degree n."""
    if not 0 <= m <= n:
        return Fraction(0)
    if (n - m) % 2 == 1:
        return Fraction(0)
    if n % 2 == 0:
        half_n, half_m = n // 2, m // 2
        mag = math.comb(half_n + half_m, half_n - half_m)
    else:
        half_n, half_m = (n - 1) // 2, (m - 1) // 2
        mag = math.comb(half_n + half_m + 1, half_n - half_m)
    drop = (n - m) // 2
    return Fraction((-1) ** drop * mag, 4**drop)


# ---------------------------------------------------------------------------
# exact cosine lattice

@dataclass(frozen=True, order=False)
class CosPoint:
    """The algebraic number cos(k*pi/m), stored as the reduced fraction k/m.

    Equality is reduced-fraction equality; ordering follows the x axis, so
    points sort by decreasing k/m.
    """

    k: int
    m: int

    def __post_init__(self):
        if self.m < 1 or not 0 <= self.k <= self.m:
            raise ValueError("need 0 <= k <= m, m >= 1")
        g = math.gcd(self.k, self.m)
        object.__setattr__(self, "k", self.k // g)
        object.__setattr__(self, "m", self.m // g)

    @property
    def angle_fraction(self) -> Fraction:
        return Fraction(self.k, self.m)

    def __lt__(self, other: "CosPoint") -> bool:
        return self.angle_fraction > other.angle_fraction

    def __le__(self, other: "CosPoint") -> bool:
        return self.angle_fraction >= other.angle_fraction

    def approx(self) -> float:
        return math.cos(math.pi * self.k / self.m)

    def exact_rational(self) -> Fraction | None:
        """Exact value when cos(k*pi/m) is rational (0, +-1/2, +-1)."""
        table = {
            Fraction(0): Fraction(1),
            Fraction(1, 3): Fraction(1, 2),
            Fraction(1, 2): Fraction(0),
            Fraction(2, 3): Fraction(-1, 2),
            Fraction(1): Fraction(-1),
        }
        return table.get(self.angle_fraction)

    def enclosure(self, bits: int = 60) -> Interval:
        """Dyadic interval of width <= 2**-bits containing cos(k*pi/m)."""
        exact = self.exact_rational()
        if exact is not None:
            return Interval(exact, exact)
        return cos_enclosure(self.k, self.m, bits)

    def is_zero_of_second_kind(self, degree: int) -> bool:
        """Whether this point is a zero of the degree-n second-kind polynomial."""
        if degree < 1 or self.k == 0 or self.k == self.m:
            return False
        return (degree + 1) % self.m == 0

    def to_json(self) -> dict:
        return {"k": self.k, "m": self.m}

    @staticmethod
    def from_json(data: dict) -> "CosPoint":
        return CosPoint(data["k"], data["m"])


def _raw_mpf_to_fraction(raw) -> Fraction:
    sign, man, exp, _ = raw
    value = Fraction(int(man)) * (Fraction(2) ** exp)
    return -value if sign else value


def cos_enclosure(k: int, m: int, bits: int) -> Interval:
    """Certified interval for cos(k*pi/m) via directed-rounding arithmetic."""
    target = Fraction(1, 2**bits)
    prec = bits + 12
    while prec <= PRECISION_CAP_BITS + bits:
        ctx = mpmath.iv
        old = ctx.prec
        try:
            ctx.prec = prec
            value = ctx.cos(ctx.pi * k / m)
        finally:
            ctx.prec = old
        lo_raw, hi_raw = value._mpi_
        enc = Interval(_raw_mpf_to_fraction(lo_raw), _raw_mpf_to_fraction(hi_raw))
        # outward rounding at bits+2 widens by at most 2**-(bits+1)
        if enc.width <= target / 2:
            return enc.round_dyadic(bits + 2)
        prec *= 2
    raise PrecisionExhausted(f"cos({k}*pi/{m}) enclosure at {bits} bits")


def closed_form_zeros(kind: str, n: int) -> list[CosPoint]:
    """The n zeros of the degree-n Chebyshev polynomial, increasing in x."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    if kind == "second":
        points = [CosPoint(k, n + 1) for k in range(1, n + 1)]
    elif kind == "first":
        points = [CosPoint(2 * k - 1, 2 * n) for k in range(1, n + 1)]
    elif kind == "third":
        points = [CosPoint(2 * k - 1, 2 * n + 1) for k in range(1, n + 1)]
    elif kind == "fourth":
        points = [CosPoint(2 * k, 2 * n + 1) for k in range(1, n + 1)]
    else:
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    return sorted(points)


def second_kind_zeros(degree: int) -> list[CosPoint]:
    """Zeros of the degree-n second-kind polynomial (empty for n <= 0)."""
    if degree < 1:
        return []
    return closed_form_zeros("second", degree)


def evaluate_point(p: Polynomial, x: CosPoint, bits: int = 60) -> Interval:
    """Certified interval for p(cos(k*pi/m)) of width <= 2**-bits."""
    coeffs = p.rational_coeffs()
    if not coeffs:
        return Interval.point(0)
    target = Fraction(1, 2**bits)
    in_bits = bits + max(4, p.degree.bit_length() * 2 + 4)
    while in_bits <= PRECISION_CAP_BITS:
        enc = x.enclosure(in_bits)
        acc = Interval.point(0)
        for c in reversed(coeffs):
            acc = (acc * enc).shift(c)
        if acc.width <= target:
            return acc
        in_bits *= 2
    raise PrecisionExhausted(f"evaluation at cos({x.k}*pi/{x.m}) to {bits} bits")


def certified_sign(p: Polynomial, x: CosPoint, start_bits: int = 60) -> int:
    """Exact sign of p at a cosine point, assuming the value is nonzero."""
    exact = x.exact_rational()
    if exact is not None:
        value = evaluate(p, exact)
        return (value > 0) - (value < 0)
    bits = start_bits
    while bits <= PRECISION_CAP_BITS:
        enc = evaluate_point(p, x, bits)
        sign = enc.sign()
        if sign is not None and sign != 0:
            return sign
        if sign == 0:
            return 0
        bits *= 2
    raise PrecisionExhausted(f"sign of value at cos({x.k}*pi/{x.m}) undecided")
