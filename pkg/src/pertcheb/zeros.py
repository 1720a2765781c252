"""Zero analysis: exact real-root isolation, Gershgorin regions, origin and
extremal-zero classification.

Real roots are isolated by Sturm sequences computed over the integers with
primitive-part reduction at every division step, which keeps coefficient
growth tame at the degrees this package targets.  Complex roots come from a
simultaneous Aberth-type iteration in double precision; everything that is
claimed exactly is certified with rational or quadratic-extension arithmetic.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from .connection import cc_canonical_dilatation, cc_canonical_translation
from .core import (
    CosPoint,
    PerturbationSpec,
    Polynomial,
    RecurrenceSpec,
    certified_sign,
    generate,
    perturbed_spec,
    PRECISION_CAP_BITS,
)
from .errors import NonPositiveGamma, PrecisionExhausted
from .scalars import (
    Interval,
    MixedRadicand,
    QuadExt,
    format_rational,
    rational_sqrt,
    to_fraction,
)

# ---------------------------------------------------------------------------
# integer polynomial layer (ascending coefficient lists)

def _strip(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _content(poly: list[int]) -> int:
    g = 0
    for c in poly:
        g = math.gcd(g, c)
    return g or 1


def _primitive(poly: list[int]) -> list[int]:
    g = _content(poly)
    return [c // g for c in poly]


def _to_int_poly(coeffs: list[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    return _primitive(_strip(ints))


def _derivative_int(poly: list[int]) -> list[int]:
    return _strip([k * poly[k] for k in range(1, len(poly))])


def _signed_pseudo_rem(f: list[int], g: list[int]) -> list[int]:
    """Remainder of f by g with the sign of the true rational remainder."""
    dg = len(g) - 1
    lc = g[-1]
    rem = list(f)
    steps = 0
    while rem and len(rem) - 1 >= dg:
        shift = len(rem) - 1 - dg
        lead = rem[-1]
        rem = [c * lc for c in rem]
        for i, gc in enumerate(g):
            rem[shift + i] -= lead * gc
        _strip(rem)
        steps += 1
    if lc < 0 and steps % 2 == 1:
        rem = [-c for c in rem]
    return rem


def _gcd_int(f: list[int], g: list[int]) -> list[int]:
    """Primitive gcd with positive leading coefficient."""
    a, b = _primitive(_strip(list(f))), _primitive(_strip(list(g)))
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, _primitive(_signed_pseudo_rem(a, b))
    if not a:
        return []
    return a if a[-1] > 0 else [-c for c in a]


def _exact_div_int(f: list[int], g: list[int]) -> list[int]:
    """Exact quotient f / g over the integers (raises if division fails)."""
    rem = list(f)
    dg = len(g) - 1
    out = [0] * (len(f) - dg)
    for shift in range(len(f) - 1 - dg, -1, -1):
        if len(rem) - 1 < dg + shift:
            continue
        q, check = divmod(rem[dg + shift], g[-1])
        if check:
            raise ArithmeticError("inexact integer polynomial division")
        out[shift] = q
        for i, gc in enumerate(g):
            rem[shift + i] -= q * gc
        _strip(rem)
    if _strip(rem):
        raise ArithmeticError("nonzero remainder in exact division")
    return _strip(out)


def _sturm_chain(poly: list[int]) -> list[list[int]]:
    chain = [list(poly), _primitive(_derivative_int(poly))]
    while chain[-1]:
        rem = _signed_pseudo_rem(chain[-2], chain[-1])
        chain.append(_primitive([-c for c in rem]))
    chain.pop()
    return chain


def _sign_at(poly: list[int], p: int, q: int) -> int:
    """Sign of poly(p/q) for q > 0, by scaled integer Horner."""
    acc = 0
    qpow = 1
    for c in reversed(poly):
        acc = acc * p + c * qpow
        qpow *= q
    return (acc > 0) - (acc < 0)


def _variations(signs: list[int]) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _var_at(chain: list[list[int]], x: Fraction) -> int:
    p, q = x.numerator, x.denominator
    return _variations([_sign_at(member, p, q) for member in chain])


def _var_at_pos_inf(chain: list[list[int]]) -> int:
    return _variations([(m[-1] > 0) - (m[-1] < 0) for m in chain])


def _var_at_neg_inf(chain: list[list[int]]) -> int:
    signs = []
    for m in chain:
        s = (m[-1] > 0) - (m[-1] < 0)
        if (len(m) - 1) % 2 == 1:
            s = -s
        signs.append(s)
    return _variations(signs)


def _cauchy_bound(poly: list[int]) -> int:
    lead = abs(poly[-1])
    top = max(abs(c) for c in poly[:-1]) if len(poly) > 1 else 0
    return 1 + (top + lead - 1) // lead


def count_real_roots(coeffs: list[Fraction], lo: Fraction | None = None,
                     hi: Fraction | None = None) -> int:
    """Distinct real roots in (lo, hi); open ends, None means unbounded.

    The endpoints must not be roots themselves.
    """
    poly = _to_int_poly(coeffs)
    if len(poly) <= 1:
        return 0
    square_free = _exact_div_int(poly, _gcd_int(poly, _derivative_int(poly)))
    chain = _sturm_chain(square_free)
    v_lo = _var_at_neg_inf(chain) if lo is None else _var_at(chain, lo)
    v_hi = _var_at_pos_inf(chain) if hi is None else _var_at(chain, hi)
    return v_lo - v_hi


# ---------------------------------------------------------------------------
# isolation and refinement

def _simplest_rational_in(lo: Fraction, hi: Fraction) -> Fraction:
    """The rational with smallest denominator (then numerator) in [lo, hi]."""
    if lo > hi:
        lo, hi = hi, lo
    if lo <= 0 <= hi:
        return Fraction(0)
    if hi < 0:
        return -_simplest_rational_in(-hi, -lo)
    ceil_lo = -((-lo.numerator) // lo.denominator)
    if ceil_lo <= hi:
        return Fraction(ceil_lo)
    whole = lo.numerator // lo.denominator
    return whole + 1 / _simplest_rational_in(1 / (hi - whole), 1 / (lo - whole))


class _SqfRoots:
    """Root isolation for one square-free primitive integer polynomial."""

    def __init__(self, poly: list[int]):
        self.poly = poly
        self.chain = _sturm_chain(poly)

    def _sign(self, x: Fraction) -> int:
        return _sign_at(self.poly, x.numerator, x.denominator)

    def isolate(self) -> list[Interval]:
        if len(self.poly) <= 1:
            return []
        bound = Fraction(_cauchy_bound(self.poly))
        while self._sign(bound) == 0 or self._sign(-bound) == 0:
            bound += 1
        found: list[Interval] = []
        stack = [(-bound, bound, _var_at(self.chain, -bound), _var_at(self.chain, bound))]
        while stack:
            a, b, va, vb = stack.pop()
            count = va - vb
            if count == 0:
                continue
            if count == 1:
                found.append(Interval(a, b))
                continue
            mid = (a + b) / 2
            if self._sign(mid) == 0:
                found.append(Interval(mid, mid))
                # shrink an exclusion window around the exact root
                w = (b - a) / 4
                while True:
                    left, right = mid - w, mid + w
                    if (self._sign(left) != 0 and self._sign(right) != 0
                            and _var_at(self.chain, left) - _var_at(self.chain, right) == 1):
                        break
                    w /= 2
                stack.append((a, left, va, _var_at(self.chain, left)))
                stack.append((right, b, _var_at(self.chain, right), vb))
            else:
                vm = _var_at(self.chain, mid)
                stack.append((a, mid, va, vm))
                stack.append((mid, b, vm, vb))
        return sorted(found, key=lambda iv: iv.lo)

    def refine(self, iv: Interval, width: Fraction) -> Interval:
        if iv.width == 0:
            return iv
        a, b = iv.lo, iv.hi
        sa = self._sign(a)
        while b - a > width:
            mid = (a + b) / 2
            sm = self._sign(mid)
            if sm == 0:
                return Interval(mid, mid)
            if sm == sa:
                a = mid
            else:
                b = mid
        return Interval(a, b)

    def pin_rational(self, iv: Interval) -> Interval:
        """Detect an exact rational root inside an isolating interval."""
        if iv.width == 0:
            return iv
        tight = self.refine(iv, Fraction(1, 2**48))
        if tight.width == 0:
            return tight
        candidate = _simplest_rational_in(tight.lo, tight.hi)
        if self._sign(candidate) == 0:
            return Interval(candidate, candidate)
        return tight


def _square_free_factors(poly: list[int]) -> list[tuple[list[int], int]]:
    """Yun decomposition: pairwise-coprime square-free factors with multiplicity."""
    deriv = _derivative_int(poly)
    g = _gcd_int(poly, deriv)
    if len(g) == 1:
        return [(poly, 1)]
    c = _exact_div_int(poly, g)
    d = [x - y for x, y in _pad(_exact_div_int(deriv, g), _derivative_int(c))]
    _strip(d)
    factors = []
    mult = 1
    while len(c) > 1:
        a = _gcd_int(c, d)
        if len(a) > 1:
            factors.append((a, mult))
        c = _exact_div_int(c, a)
        d = [x - y for x, y in _pad(_exact_div_int(d, a), _derivative_int(c))]
        _strip(d)
        mult += 1
    return factors


def _pad(a: list[int], b: list[int]) -> list[tuple[int, int]]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]


def real_roots_with_multiplicity(
    coeffs: list[Fraction], width: Fraction = Fraction(1, 2**40)
) -> list[tuple[Interval, int]]:
    """All real roots as (isolating interval, multiplicity), sorted increasing."""
    poly = _to_int_poly(coeffs)
    if len(poly) <= 1:
        return []
    zero_mult = 0
    while poly[0] == 0:
        poly.pop(0)
        zero_mult += 1
    entries: list[tuple[Interval, int, _SqfRoots | None]] = []
    if zero_mult:
        entries.append((Interval.point(0), zero_mult, None))
    if len(poly) > 1:
        for factor, mult in _square_free_factors(poly):
            worker = _SqfRoots(factor)
            for iv in worker.isolate():
                iv = worker.pin_rational(iv)
                iv = worker.refine(iv, width)
                entries.append((iv, mult, worker))
    # roots of distinct factors are distinct; refine any touching pair apart
    while True:
        entries.sort(key=lambda e: (e[0].lo, e[0].hi))
        clash = next(
            (
                i
                for i in range(len(entries) - 1)
                if entries[i][0].hi >= entries[i + 1][0].lo
            ),
            None,
        )
        if clash is None:
            break
        for j in (clash, clash + 1):
            iv, mult, worker = entries[j]
            if worker is not None and iv.width > 0:
                entries[j] = (worker.refine(iv, iv.width / 4), mult, worker)
    return [(iv, mult) for iv, mult, _ in entries]


def real_roots(p: Polynomial, width: Fraction = Fraction(1, 2**40)) -> list[Interval]:
    """Isolating intervals for the distinct real roots of p, sorted increasing."""
    if p.degree < 1:
        return []
    return [iv for iv, _ in real_roots_with_multiplicity(p.rational_coeffs(), width)]


# ---------------------------------------------------------------------------
# complex roots: Aberth simultaneous iteration at double precision

def _poly_eval_complex(coeffs: list[float], z: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def aberth_roots(coeffs: list[float], tol: float = 1e-13,
                 max_iter: int = 200) -> list[complex]:
    """All roots of a double-precision polynomial by Aberth's iteration."""
    degree = len(coeffs) - 1
    if degree < 1:
        return []
    lead = coeffs[-1]
    monic = [c / lead for c in coeffs]
    deriv = [k * monic[k] for k in range(1, degree + 1)]
    radius = 1.0 + max(abs(c) for c in monic[:-1])
    z = [
        0.7 * radius * complex(math.cos(a), math.sin(a))
        for a in (2 * math.pi * (j + 0.35) / degree + 0.5 for j in range(degree))
    ]
    norm = math.sqrt(sum(c * c for c in monic))
    for _ in range(max_iter):
        moved = 0.0
        for j in range(degree):
            pj = _poly_eval_complex(monic, z[j])
            dj = _poly_eval_complex(deriv, z[j])
            if dj == 0:
                z[j] += 1e-8 + 1e-8j
                moved = math.inf
                continue
            newton = pj / dj
            repulse = sum(1 / (z[j] - z[k]) for k in range(degree) if k != j)
            denom = 1 - newton * repulse
            step = newton if denom == 0 else newton / denom
            z[j] -= step
            moved = max(moved, abs(step))
        if moved < 1e-15:
            break
    # Newton polish
    for j in range(degree):
        for _ in range(20):
            pj = _poly_eval_complex(monic, z[j])
            if abs(pj) <= tol * norm:
                break
            dj = _poly_eval_complex(deriv, z[j])
            if dj == 0:
                break
            z[j] -= pj / dj
    return z


@dataclass(frozen=True)
class ZeroReport:
    """Exact-count real roots plus double-precision complex conjugate pairs."""

    degree: int
    real_roots: tuple[tuple[Interval, float], ...]  # repeated per multiplicity
    complex_pairs: tuple[tuple[float, float], ...]  # (re, +im) per pair

    @property
    def n_real(self) -> int:
        return len(self.real_roots)

    @property
    def n_complex_pairs(self) -> int:
        return len(self.complex_pairs)

    def to_json(self) -> dict:
        return {
            "real": [
                {
                    "lo": format_rational(iv.lo),
                    "hi": format_rational(iv.hi),
                    "approx": approx,
                }
                for iv, approx in self.real_roots
            ],
            "complex": [[re, im] for re, im in self.complex_pairs],
        }

    @staticmethod
    def from_json(data: dict) -> "ZeroReport":
        real = tuple(
            (Interval(to_fraction(e["lo"]), to_fraction(e["hi"])), e["approx"])
            for e in data["real"]
        )
        pairs = tuple((re, im) for re, im in data["complex"])
        return ZeroReport(len(real) + 2 * len(pairs), real, pairs)


def all_roots(p: Polynomial, tol: float = 1e-13, bits: int = 40) -> ZeroReport:
    """Real roots with exact counts, complex pairs to roughly double precision.

    ``bits`` sets the isolating-interval width target 2**-bits.
    """
    coeffs = p.rational_coeffs()
    degree = p.degree
    if degree < 1:
        return ZeroReport(max(degree, 0), (), ())
    real_entries = []
    for iv, mult in real_roots_with_multiplicity(coeffs, Fraction(1, 2**bits)):
        approx = float((iv.lo + iv.hi) / 2)
        real_entries.extend([(iv, approx)] * mult)
    n_real = len(real_entries)
    pairs = (degree - n_real) // 2
    complex_pairs: list[tuple[float, float]] = []
    if pairs:
        roots = aberth_roots([float(c) for c in coeffs], tol=tol)
        candidates = sorted(roots, key=lambda w: (-abs(w.imag), w.real))[: 2 * pairs]
        upper = sorted(
            (w for w in candidates if w.imag > 0), key=lambda w: (w.real, w.imag)
        )
        if len(upper) != pairs:
            raise PrecisionExhausted(
                f"complex pairing failed: {len(upper)} upper roots for {pairs} pairs"
            )
        floats = [float(c) for c in coeffs]
        norm = math.sqrt(sum(c * c for c in floats))
        for w in upper:
            if abs(_poly_eval_complex(floats, w)) > tol * norm:
                raise PrecisionExhausted(f"residual above {tol} at root near {w}")
        complex_pairs = [(w.real, w.imag) for w in upper]
    return ZeroReport(degree, tuple(real_entries), tuple(complex_pairs))


# ---------------------------------------------------------------------------
# Jacobi matrices and Gershgorin regions

@dataclass(frozen=True)
class SymTridiagonal:
    """Symmetric tridiagonal matrix whose leading minors generate the family."""

    diag: tuple[Fraction, ...]
    offdiag: tuple[QuadExt, ...]

    @property
    def n(self) -> int:
        return len(self.diag)


def _context_radicand(gammas: list[Fraction]) -> Fraction:
    radicands = set()
    for g in gammas:
        if rational_sqrt(g) is None:
            radicands.add(4 * g)
    if len(radicands) > 1:
        raise MixedRadicand(f"several irrational gamma radicands: {sorted(radicands)}")
    return radicands.pop() if radicands else Fraction(0)


def jacobi(spec: RecurrenceSpec, n: int) -> SymTridiagonal:
    """Order-n Jacobi matrix; needs concrete, strictly positive gammas."""
    if n < 1:
        raise ValueError("matrix order must be >= 1")
    gammas = []
    for i in range(1, n):
        g = spec.gamma(i).rational_value()
        if g <= 0:
            raise NonPositiveGamma(f"gamma_{i} = {g} is not positive")
        gammas.append(g)
    rad = _context_radicand(gammas)
    diag = tuple(spec.beta(i).rational_value() for i in range(n))
    offdiag = tuple(
        QuadExt.sqrt(g, rad if rad else None) for g in gammas
    )
    return SymTridiagonal(diag, offdiag)


@dataclass(frozen=True)
class GershgorinRegion:
    """Sorted union of disjoint closed intervals with exact endpoints."""

    intervals: tuple[tuple[QuadExt, QuadExt], ...]

    def contains_float(self, x: float, slack: float = 0.0) -> bool:
        return any(
            float(lo) - slack <= x <= float(hi) + slack for lo, hi in self.intervals
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GershgorinRegion):
            return NotImplemented
        if len(self.intervals) != len(other.intervals):
            return False
        return all(
            a_lo.compare(b_lo) == 0 and a_hi.compare(b_hi) == 0
            for (a_lo, a_hi), (b_lo, b_hi) in zip(self.intervals, other.intervals)
        )

    def to_json(self) -> list:
        return [{"lo": lo.to_json(), "hi": hi.to_json()} for lo, hi in self.intervals]

    @staticmethod
    def from_json(data: list) -> "GershgorinRegion":
        return GershgorinRegion(
            tuple(
                (QuadExt.from_json(e["lo"]), QuadExt.from_json(e["hi"]))
                for e in data
            )
        )


def merge_intervals(raw: list[tuple[QuadExt, QuadExt]]) -> GershgorinRegion:
    """Sort (exactly) and merge closed intervals that overlap or touch."""

    def cmp(a, b):
        c = a[0].compare(b[0])
        return c if c else a[1].compare(b[1])

    items = sorted(raw, key=functools.cmp_to_key(cmp))
    merged: list[tuple[QuadExt, QuadExt]] = []
    for lo, hi in items:
        if merged and merged[-1][1].compare(lo) >= 0:
            last_lo, last_hi = merged[-1]
            merged[-1] = (last_lo, hi if hi.compare(last_hi) > 0 else last_hi)
        else:
            merged.append((lo, hi))
    return GershgorinRegion(tuple(merged))


def gershgorin(spec: RecurrenceSpec, n: int) -> GershgorinRegion:
    """Merged union of the Gershgorin intervals of the order-n Jacobi matrix."""
    matrix = jacobi(spec, n)
    zero = QuadExt(Fraction(0))
    raw = []
    for i in range(n):
        left = matrix.offdiag[i - 1] if i >= 1 else zero
        right = matrix.offdiag[i] if i < n - 1 else zero
        radius = left + right
        center = QuadExt(matrix.diag[i])
        raw.append((center - radius, center + radius))
    return merge_intervals(raw)


# closed-form unions for the two perturbation families ----------------------

def _iv(lo, hi) -> tuple[QuadExt, QuadExt]:
    return (QuadExt.of(to_fraction(lo)), QuadExt.of(to_fraction(hi)))


def prop_translation_union(r: int, mu, n: int) -> GershgorinRegion:
    """Case-by-case closed form of the translated family's Gershgorin union."""
    mu = to_fraction(mu)
    half = Fraction(1, 2)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        point = mu if r == 0 else Fraction(0)
        return GershgorinRegion((_iv(point, point),))
    if n <= r:  # perturbation not yet visible
        if n == 2:
            return GershgorinRegion((_iv(-half, half),))
        return GershgorinRegion((_iv(-1, 1),))

    def two(base_lo, base_hi, pert_lo, pert_hi):
        return merge_intervals([_iv(base_lo, base_hi), _iv(pert_lo, pert_hi)])

    if n == 2:  # perturbed row has radius 1/2, base disc is [-1/2, 1/2]
        if -1 <= mu < 0:
            return GershgorinRegion((_iv(mu - half, half),))
        if 0 < mu <= 1:
            return GershgorinRegion((_iv(-half, mu + half),))
        return two(-half, half, mu - half, mu + half)
    if r == 1 and n == 3:  # perturbed middle row, base discs reach 1/2 only
        if -Fraction(3, 2) <= mu <= -half:
            return GershgorinRegion((_iv(mu - 1, half),))
        if -half <= mu <= half:
            return GershgorinRegion((_iv(mu - 1, mu + 1),))
        if half <= mu <= Fraction(3, 2):
            return GershgorinRegion((_iv(-half, mu + 1),))
        return two(-half, half, mu - 1, mu + 1)
    if (r == 0 and n >= 3) or (r >= 2 and n == r + 1):
        # perturbed disc radius 1/2 against the full [-1, 1]
        if -Fraction(3, 2) <= mu <= -half:
            return GershgorinRegion((_iv(mu - half, 1),))
        if -half <= mu <= half:
            return GershgorinRegion((_iv(-1, 1),))
        if half <= mu <= Fraction(3, 2):
            return GershgorinRegion((_iv(-1, mu + half),))
        return two(-1, 1, mu - half, mu + half)
    # n >= r + 2 with r >= 1: perturbed disc radius 1 against [-1, 1]
    if -2 <= mu < 0:
        return GershgorinRegion((_iv(mu - 1, 1),))
    if 0 < mu <= 2:
        return GershgorinRegion((_iv(-1, mu + 1),))
    return two(-1, 1, mu - 1, mu + 1)


def prop_dilatation_union(r: int, lam, n: int) -> GershgorinRegion:
    """Case-by-case closed form of the dilated family's Gershgorin union."""
    lam = to_fraction(lam)
    if lam <= 0:
        raise NonPositiveGamma("closed form needs a positive dilatation factor")
    half = Fraction(1, 2)
    root = QuadExt.sqrt(lam)
    wide_hi = (QuadExt.of(Fraction(1)) + root).scale(half)  # (1 + sqrt(lam))/2
    wide = (-wide_hi, wide_hi)
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return GershgorinRegion((_iv(0, 0),))
    if r == 1:
        if n == 2:
            edge = root.scale(half)
            return GershgorinRegion(((-edge, edge),))
        if n == 3:
            return GershgorinRegion((wide,))
    elif r == 2:
        if n == 2:
            return GershgorinRegion((_iv(-half, half),))
        if n in (3, 4):
            return GershgorinRegion((wide,))
    else:
        if n == 2:
            return GershgorinRegion((_iv(-half, half),))
        if n <= r:
            return GershgorinRegion((_iv(-1, 1),))
    # remaining rows: the regime split
    if lam < 1:
        return GershgorinRegion((_iv(-1, 1),))
    return GershgorinRegion((wide,))


# ---------------------------------------------------------------------------
# origin behavior via the canonical tables

@dataclass(frozen=True)
class OriginReport:
    value_at_0: Fraction
    sum_of_zeros: Fraction
    product_of_zeros: Fraction
    origin_is_zero: bool

    def to_json(self) -> dict:
        return {
            "value_at_0": format_rational(self.value_at_0),
            "sum_of_zeros": format_rational(self.sum_of_zeros),
            "product_of_zeros": format_rational(self.product_of_zeros),
            "origin_is_zero": self.origin_is_zero,
        }

    @staticmethod
    def from_json(data: dict) -> "OriginReport":
        return OriginReport(
            to_fraction(data["value_at_0"]),
            to_fraction(data["sum_of_zeros"]),
            to_fraction(data["product_of_zeros"]),
            data["origin_is_zero"],
        )


def origin_report(pert: PerturbationSpec, n: int) -> OriginReport:
    """Sum/product of zeros and origin membership from canonical coefficients."""
    if pert.kind == "translation":
        table = cc_canonical_translation(pert.order, n)
    else:
        table = cc_canonical_dilatation(pert.order, n)
    value = pert.param.rational_value()
    constant = table.entry(n, 0).instantiate(value)
    sub_leading = table.entry(n, n - 1).instantiate(value) if n >= 1 else Fraction(0)
    product = constant if n % 2 == 0 else -constant
    return OriginReport(
        value_at_0=constant,
        sum_of_zeros=-sub_leading,
        product_of_zeros=product,
        origin_is_zero=constant == 0,
    )


# ---------------------------------------------------------------------------
# extremal-zero classification

@dataclass(frozen=True)
class ExtremalReport:
    sign_at_greatest: int
    sign_at_smallest: int
    n_above: int
    n_below: int

    def to_json(self) -> dict:
        return {
            "sign_at_greatest": self.sign_at_greatest,
            "sign_at_smallest": self.sign_at_smallest,
            "n_above": self.n_above,
            "n_below": self.n_below,
        }


def _count_outside(chain, poly_int: list[int], point: CosPoint, side: str) -> int:
    """Certified count of roots strictly beyond an exact cosine point."""
    exact = point.exact_rational()
    if exact is not None:
        if _sign_at(poly_int, exact.numerator, exact.denominator) == 0:
            raise PrecisionExhausted("polynomial vanishes at the reference zero")
        if side == "above":
            return _var_at(chain, exact) - _var_at_pos_inf(chain)
        return _var_at_neg_inf(chain) - _var_at(chain, exact)
    bits = 32
    while bits <= PRECISION_CAP_BITS:
        enc = point.enclosure(bits)
        lo_ok = _sign_at(poly_int, enc.lo.numerator, enc.lo.denominator) != 0
        hi_ok = _sign_at(poly_int, enc.hi.numerator, enc.hi.denominator) != 0
        if lo_ok and hi_ok:
            if side == "above":
                c_outer = _var_at(chain, enc.lo) - _var_at_pos_inf(chain)
                c_inner = _var_at(chain, enc.hi) - _var_at_pos_inf(chain)
            else:
                c_outer = _var_at_neg_inf(chain) - _var_at(chain, enc.hi)
                c_inner = _var_at_neg_inf(chain) - _var_at(chain, enc.lo)
            if c_outer == c_inner:
                return c_inner
        bits *= 2
    raise PrecisionExhausted(f"count {side} cos({point.k}*pi/{point.m}) undecided")


def extremal_report(pert: PerturbationSpec, k: int) -> ExtremalReport:
    """Signs at the base family's extremal zeros and counts of escaped zeros."""
    if k < pert.order + 1:
        raise ValueError("degree must exceed the perturbation order")
    spec = perturbed_spec(pert)
    p = generate(spec, k)[k]
    greatest = CosPoint(1, k + 1)
    smallest = CosPoint(k, k + 1)
    poly_int = _to_int_poly(p.rational_coeffs())
    square_free = _exact_div_int(poly_int, _gcd_int(poly_int, _derivative_int(poly_int)))
    chain = _sturm_chain(square_free)
    return ExtremalReport(
        sign_at_greatest=certified_sign(p, greatest),
        sign_at_smallest=certified_sign(p, smallest),
        n_above=_count_outside(chain, square_free, greatest, "above"),
        n_below=_count_outside(chain, square_free, smallest, "below"),
    )
