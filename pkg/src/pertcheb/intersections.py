"""Interception points of equal-degree perturbed polynomials.

Perturbing one recurrence coefficient shifts a degree-n polynomial by a
parameter multiple of a fixed product of two lower-degree second-kind
polynomials, so curves with different parameter values all cross where that
product vanishes.  Those abscissae live on the exact cosine lattice, which
turns every classification here into integer arithmetic on reduced fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (
    CosPoint,
    PerturbationSpec,
    Polynomial,
    chebyshev_spec,
    generate,
    second_kind_zeros,
)
from .scalars import AFF_ONE, AffineScalar


def _base_polys(n_max: int) -> list[Polynomial]:
    return generate(chebyshev_spec("second"), n_max)


def factor_degrees(kind: str, r: int, n: int) -> tuple[int, int]:
    """Degrees of the two second-kind factors in the parameter-shift product."""
    if kind == "translation":
        return r, n - r - 1
    if kind == "dilatation":
        return r - 1, n - r - 1
    raise ValueError(f"unknown perturbation kind {kind!r}")


def product_form(pert: PerturbationSpec, n: int) -> Polynomial:
    """The perturbed polynomial as base polynomial plus a two-factor product."""
    r = pert.order
    base = _base_polys(n)
    if n <= r:
        return base[n]
    if pert.kind == "translation":
        shift = (base[r] * base[n - r - 1]).scale(pert.param)
        return base[n] - shift
    weight = (AFF_ONE - pert.param).scale(Fraction(1, 4))
    shift = (base[r - 1] * base[n - r - 1]).scale(weight)
    return base[n] + shift


@dataclass(frozen=True)
class IntersectionReport:
    kind: str
    order: int
    degree: int
    points: tuple[tuple[CosPoint, bool, bool], ...]  # (point, double, common)
    origin_class: str
    predicates: dict

    @property
    def n_distinct(self) -> int:
        return len(self.points)

    def to_json(self) -> dict:
        return {
            "points": [
                {
                    "k": pt.k,
                    "m": pt.m,
                    "x_approx": pt.approx(),
                    "double": double,
                    "common": common,
                    "double_common": double and common,
                }
                for pt, double, common in self.points
            ],
            "origin": self.origin_class,
            "predicates": self.predicates,
        }


def coincidence_predicates(kind: str, r: int, n: int) -> dict:
    """Degree/order divisibility tests behind the coincidence phenomena.

    Vacuous cases (a constant factor polynomial, which has no zeros) report
    False, so 'all factor zeros ...' claims are only asserted when there is
    at least one zero to speak of.
    """
    if n < r + 1:
        raise ValueError("degree must exceed the perturbation order")
    if kind == "translation":
        quotient, residue = divmod(n - r, r + 1)
        double_common = r >= 1 and residue == 0 and quotient >= 1
        j, j_res = divmod(n + 1, r + 1)
        divides = r >= 1 and j_res == 0 and j >= 2
        return {
            "all_factor_zeros_double_common": double_common,
            "factor_divides_degree_n": divides,
        }
    if kind == "dilatation":
        double_all = r >= 2 and n % r == 0 and n // r >= 2
        common_all = r >= 2 and (n + 1) % r == 0 and (n + 1) // r >= 2
        return {
            "all_factor_zeros_double": double_all,
            "all_factor_zeros_common": common_all,
            "never_both": not (double_all and common_all),
        }
    raise ValueError(f"unknown perturbation kind {kind!r}")


def _origin_class(kind: str, r: int, n: int) -> str:
    """Parity table for the origin: interception status and common-zero status."""
    if kind == "translation":
        if n % 2 == 0:
            return "simple_interception"
        if r % 2 == 0:
            return "not_interception"
        return "double_common_zero"
    if n % 2 == 1:
        return "simple_common_zero"
    if r % 2 == 0:
        return "double_interception"
    return "not_interception"


def intersection_points(kind: str, r: int, n: int) -> IntersectionReport:
    """Exact interception points of the degree-n perturbed family.

    A point is double when both factor polynomials vanish there, and a common
    zero when the unperturbed degree-n polynomial vanishes there too; both
    tests are reduced-fraction membership in the relevant zero lattices.
    """
    if n < r + 1:
        raise ValueError("degree must exceed the perturbation order")
    deg_a, deg_b = factor_degrees(kind, r, n)
    zeros_a = set(second_kind_zeros(deg_a))
    zeros_b = set(second_kind_zeros(deg_b))
    merged = sorted(zeros_a | zeros_b)
    points = tuple(
        (pt, pt in zeros_a and pt in zeros_b, pt.is_zero_of_second_kind(n))
        for pt in merged
    )
    return IntersectionReport(
        kind=kind,
        order=r,
        degree=n,
        points=points,
        origin_class=_origin_class(kind, r, n),
        predicates=coincidence_predicates(kind, r, n),
    )


def linearization_check(r: int, n: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the second-kind product linearization, for exact comparison.

    Left: the degree-r and degree-(n+r) polynomials multiplied out.
    Right: the quarter-power weighted sum of the polynomials of degrees
    n+2r, n+2r-2, ..., n.
    """
    base = _base_polys(n + 2 * r)
    lhs = base[r] * base[n + r]
    rhs = Polynomial.zero()
    for i in range(r + 1):
        rhs = rhs + base[n + 2 * (r - i)].scale(
            AffineScalar(Fraction(1, 4**i))
        )
    return lhs, rhs
