"""One-shot verification harness.

Every suite checks one family of exact identities or certified counts over a
fixed default grid and reports (checks, failures, first witness).  The
harness is deterministic: fixed grids, fixed ordering, no timing output.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .connection import (
    cc_canonical_dilatation,
    cc_canonical_translation,
    cc_closed_dilatation,
    cc_closed_translation,
    cc_recurrence,
    format_affine_symbolic,
    reconstruct,
)
from .core import (
    CosPoint,
    PerturbationSpec,
    canonical_cheb_coeff,
    chebyshev_spec,
    evaluate_point,
    generate,
    monomial_basis,
    perturbed_spec,
    second_kind_zeros,
)
from .intersections import (
    coincidence_predicates,
    intersection_points,
    linearization_check,
    product_form,
)
from .scalars import AffineScalar
from .zeros import (
    _derivative_int,
    _gcd_int,
    _to_int_poly,
    all_roots,
    count_real_roots,
    extremal_report,
    gershgorin,
    origin_report,
    prop_dilatation_union,
    prop_translation_union,
    real_roots,
)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: int = 0
    witness: str = ""

    def record(self, ok: bool, witness: str) -> None:
        self.checks += 1
        if not ok:
            self.failures += 1
            if not self.witness:
                self.witness = witness


TRANSLATION_PARAMS = [Fraction(-2), Fraction(-1, 2), Fraction(1, 3),
                      Fraction(1), Fraction(5, 2)]
DILATATION_PARAMS = [Fraction(1, 4), Fraction(1, 2), Fraction(2), Fraction(3),
                     Fraction(7), Fraction(-1)]


def _pert_grid(r_max: int):
    for r in range(r_max + 1):
        yield "translation", r
    for r in range(1, r_max + 1):
        yield "dilatation", r


def _closed_table(kind: str, r: int, n_max: int):
    if kind == "translation":
        return cc_closed_translation(r, n_max)
    return cc_closed_dilatation(r, n_max)


def _canonical_table(kind: str, r: int, n_max: int):
    if kind == "translation":
        return cc_canonical_translation(r, n_max)
    return cc_canonical_dilatation(r, n_max)


def _formal_pert(kind: str, r: int) -> PerturbationSpec:
    return PerturbationSpec(kind, r, AffineScalar.formal())


# ---------------------------------------------------------------------------
# suites

def suite_cross_method(r_max: int = 6, n_max: int = 30) -> SuiteResult:
    """Recurrence-computed tables equal the closed diagonal tables, exactly."""
    result = SuiteResult("cross_method")
    base = chebyshev_spec("second")
    for kind, r in _pert_grid(r_max):
        closed = _closed_table(kind, r, n_max)
        rec = cc_recurrence(perturbed_spec(_formal_pert(kind, r)), base, n_max)
        for n in range(n_max + 1):
            for m in range(n + 1):
                result.record(
                    closed.entry(n, m) == rec.entry(n, m),
                    f"{kind} r={r} entry ({n},{m})",
                )
    return result


EXPECTED_TABLE_1 = [
    ["1"],
    ["0", "1"],
    ["0", "0", "1"],
    ["0", "0", "0", "1"],
    ["0", "0", "0", "-mu", "1"],
    ["0", "0", "-mu/4", "0", "-mu", "1"],
    ["0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"],
    ["-mu/64", "0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"],
    ["0", "-mu/64", "0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"],
    ["0", "0", "-mu/64", "0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"],
    ["0", "0", "0", "-mu/64", "0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"],
    ["0", "0", "0", "0", "-mu/64", "0", "-mu/16", "0", "-mu/4", "0", "-mu", "1"],
]

EXPECTED_TABLE_2 = [
    ["1"],
    ["0", "1"],
    ["0", "0", "1"],
    ["0", "0", "0", "1"],
    ["0", "0", "(1-lambda)/4", "0", "1"],
    ["0", "(1-lambda)/16", "0", "(1-lambda)/4", "0", "1"],
    ["(1-lambda)/64", "0", "(1-lambda)/16", "0", "(1-lambda)/4", "0", "1"],
    ["0", "(1-lambda)/64", "0", "(1-lambda)/16", "0", "(1-lambda)/4", "0", "1"],
    ["0", "0", "(1-lambda)/64", "0", "(1-lambda)/16", "0", "(1-lambda)/4", "0", "1"],
    ["0", "0", "0", "(1-lambda)/64", "0", "(1-lambda)/16", "0", "(1-lambda)/4",
     "0", "1"],
    ["0", "0", "0", "0", "(1-lambda)/64", "0", "(1-lambda)/16", "0",
     "(1-lambda)/4", "0", "1"],
]


def suite_tables() -> SuiteResult:
    """Symbolic order-3 table renderings match the published entries."""
    result = SuiteResult("tables")
    for expected, table in (
        (EXPECTED_TABLE_1, cc_closed_translation(3, 11)),
        (EXPECTED_TABLE_2, cc_closed_dilatation(3, 10)),
    ):
        for n, row in enumerate(expected):
            for m, want in enumerate(row):
                got = format_affine_symbolic(table.entry(n, m), table.symbol)
                result.record(got == want, f"{table.kind} entry ({n},{m}): "
                                           f"{got!r} != {want!r}")
    return result


def suite_reconstruction(r_max: int = 6, n_max: int = 30) -> SuiteResult:
    """Both connection tables rebuild the generated perturbed polynomials."""
    result = SuiteResult("reconstruction")
    base_polys = generate(chebyshev_spec("second"), n_max)
    monomials = monomial_basis(n_max)
    for kind, r in _pert_grid(r_max):
        closed = _closed_table(kind, r, n_max)
        canonical = _canonical_table(kind, r, n_max)
        params = TRANSLATION_PARAMS if kind == "translation" else DILATATION_PARAMS
        for value in params:
            direct = generate(
                perturbed_spec(PerturbationSpec(kind, r, value)), n_max
            )
            via_second = reconstruct(closed.instantiate(value), base_polys)
            via_canonical = reconstruct(canonical.instantiate(value), monomials)
            for n in range(n_max + 1):
                result.record(
                    via_second[n].coeffs == direct[n].coeffs,
                    f"{kind} r={r} param={value} second-basis row {n}",
                )
                result.record(
                    via_canonical[n].coeffs == direct[n].coeffs,
                    f"{kind} r={r} param={value} canonical row {n}",
                )
    return result


def suite_kind_identities(n_max: int = 20) -> SuiteResult:
    """The classic families arise as specific perturbations, exactly."""
    result = SuiteResult("kind_identities")
    second = generate(chebyshev_spec("second"), n_max + 5)
    half = Fraction(1, 2)

    for kind_label, pert in (
        ("third", PerturbationSpec.translation(0, half)),
        ("fourth", PerturbationSpec.translation(0, -half)),
        ("first", PerturbationSpec.dilatation(1, 2)),
    ):
        classic = generate(chebyshev_spec(kind_label), n_max)
        via_pert = generate(perturbed_spec(pert), n_max)
        for n in range(n_max + 1):
            result.record(
                classic[n].coeffs == via_pert[n].coeffs,
                f"{kind_label} as perturbation, degree {n}",
            )

    first = generate(chebyshev_spec("first"), n_max + 2)
    third = generate(chebyshev_spec("third"), n_max + 1)
    fourth = generate(chebyshev_spec("fourth"), n_max + 1)
    for n in range(n_max + 1):
        result.record(
            first[n + 2].coeffs
            == (second[n + 2] - second[n].scale(Fraction(1, 4))).coeffs,
            f"first-kind relation at {n}",
        )
        result.record(
            third[n + 1].coeffs == (second[n + 1] - second[n].scale(half)).coeffs,
            f"third-kind relation at {n}",
        )
        result.record(
            fourth[n + 1].coeffs == (second[n + 1] + second[n].scale(half)).coeffs,
            f"fourth-kind relation at {n}",
        )

    # low-order connection relations with the formal parameter
    mu = AffineScalar.formal()
    co_rec = generate(perturbed_spec(PerturbationSpec.translation(0)), n_max + 1)
    for n in range(n_max + 1):
        want = second[n + 1] - second[n].scale(mu)
        result.record(co_rec[n + 1].coeffs == want.coeffs, f"co-recursive row {n + 1}")

    order1 = generate(perturbed_spec(PerturbationSpec.translation(1)), n_max + 3)
    result.record(
        order1[2].coeffs == (second[2] - second[1].scale(mu)).coeffs,
        "order-1 translation row 2",
    )
    for n in range(n_max + 1):
        want = second[n + 3] - second[n + 2].scale(mu) - second[n].scale(
            mu.scale(Fraction(1, 4))
        )
        result.record(order1[n + 3].coeffs == want.coeffs,
                      f"order-1 translation row {n + 3}")

    order2 = generate(perturbed_spec(PerturbationSpec.translation(2)), n_max + 5)
    result.record(
        order2[3].coeffs == (second[3] - second[2].scale(mu)).coeffs,
        "order-2 translation row 3",
    )
    result.record(
        order2[4].coeffs
        == (second[4] - second[3].scale(mu)
            - second[1].scale(mu.scale(Fraction(1, 4)))).coeffs,
        "order-2 translation row 4",
    )
    for n in range(n_max + 1):
        want = (second[n + 5] - second[n + 4].scale(mu)
                - second[n + 2].scale(mu.scale(Fraction(1, 4)))
                - second[n].scale(mu.scale(Fraction(1, 16))))
        result.record(order2[n + 5].coeffs == want.coeffs,
                      f"order-2 translation row {n + 5}")

    lam = AffineScalar.formal()
    weight = (AffineScalar.of(1) - lam).scale(Fraction(1, 4))
    dil1 = generate(perturbed_spec(PerturbationSpec.dilatation(1)), n_max + 2)
    for n in range(n_max + 1):
        want = second[n + 2] + second[n].scale(weight)
        result.record(dil1[n + 2].coeffs == want.coeffs,
                      f"order-1 dilatation row {n + 2}")

    dil2 = generate(perturbed_spec(PerturbationSpec.dilatation(2)), n_max + 4)
    result.record(
        dil2[3].coeffs == (second[3] + second[1].scale(weight)).coeffs,
        "order-2 dilatation row 3",
    )
    for n in range(n_max + 1):
        want = (second[n + 4] + second[n + 2].scale(weight)
                + second[n].scale(weight.scale(Fraction(1, 4))))
        result.record(dil2[n + 4].coeffs == want.coeffs,
                      f"order-2 dilatation row {n + 4}")
    return result


def suite_canonical(r_max: int = 6, n_max: int = 30) -> SuiteResult:
    """Canonical tables equal the perturbed polynomials' coefficients; spot
    values of the low-order corollaries hold."""
    result = SuiteResult("canonical")
    for kind, r in _pert_grid(r_max):
        table = _canonical_table(kind, r, n_max)  # dual-path checked inside
        direct = generate(perturbed_spec(_formal_pert(kind, r)), n_max)
        for n in range(n_max + 1):
            for m in range(n + 1):
                result.record(
                    table.entry(n, m) == direct[n].coeff(m),
                    f"canonical {kind} r={r} entry ({n},{m})",
                )
    table_t2 = cc_canonical_translation(2, 6)
    result.record(
        table_t2.entry(4, 2) == AffineScalar(Fraction(-3, 4)),
        "translation r=2 spot (4,2)",
    )
    result.record(
        table_t2.entry(3, 0) == AffineScalar(Fraction(0), Fraction(1, 4)),
        "translation r=2 spot (3,0)",
    )
    result.record(
        table_t2.entry(4, 3) == AffineScalar(Fraction(0), Fraction(-1)),
        "translation r=2 spot (4,3)",
    )
    table_d2 = cc_canonical_dilatation(2, 12)
    want_31 = AffineScalar(
        canonical_cheb_coeff(3, 1) + Fraction(1, 4), Fraction(-1, 4)
    )
    result.record(table_d2.entry(3, 1) == want_31, "dilatation r=2 spot (3,1)")
    for n in range(4):
        want = AffineScalar(Fraction(-(2 * n + 2), 4), Fraction(-1, 4))
        result.record(
            table_d2.entry(2 * n + 4, 2 * n + 2) == want,
            f"dilatation r=2 sub-sub-diagonal row {2 * n + 4}",
        )
    table_t0 = cc_canonical_translation(0, 15)
    for n in range(7):
        for nu in range(n + 1):
            want = AffineScalar(Fraction(0), -canonical_cheb_coeff(2 * n, 2 * nu))
            result.record(
                table_t0.entry(2 * n + 1, 2 * nu) == want,
                f"co-recursive canonical spot ({2 * n + 1},{2 * nu})",
            )
    return result


def _expected_origin(kind: str, r: int, n: int, value: Fraction):
    """Independent parity-case closed forms for sum and product of zeros."""
    if kind == "translation":
        total = value if n >= r + 1 else Fraction(0)
        if n % 2 == 0:
            half_n = n // 2
            prod = Fraction((-1) ** half_n, 4**half_n)
        else:
            half_n = (n - 1) // 2
            if r % 2 == 1 or n <= r:
                prod = Fraction(0)
            else:
                prod = value * Fraction((-1) ** half_n, 4**half_n)
        return total, prod
    # dilatation: symmetric, sum always zero
    total = Fraction(0)
    if n % 2 == 1:
        return total, Fraction(0)
    half_n = n // 2
    base = Fraction((-1) ** half_n, 4**half_n)
    if r % 2 == 0 or n <= r:
        return total, base
    return total, base * value


def suite_origin_viete(r_max: int = 6, n_max: int = 25) -> SuiteResult:
    """Origin reports match the parity case analysis; float sums/products of
    computed zeros match the exact ones."""
    result = SuiteResult("origin_viete")
    t_params = [Fraction(-2), Fraction(1, 3), Fraction(1), Fraction(0)]
    d_params = [Fraction(1, 2), Fraction(3), Fraction(-1), Fraction(1)]
    for kind, r in _pert_grid(r_max):
        params = t_params if kind == "translation" else d_params
        for value in params:
            for n in range(n_max + 1):
                rep = origin_report(PerturbationSpec(kind, r, value), n)
                want_sum, want_prod = _expected_origin(kind, r, n, value)
                result.record(
                    rep.sum_of_zeros == want_sum,
                    f"{kind} r={r} p={value} n={n} sum",
                )
                result.record(
                    rep.product_of_zeros == want_prod,
                    f"{kind} r={r} p={value} n={n} product",
                )
                result.record(
                    rep.origin_is_zero == (want_prod == 0) == (rep.value_at_0 == 0),
                    f"{kind} r={r} p={value} n={n} origin flag",
                )
    # unperturbed base cases
    for n in range(n_max + 1):
        rep = origin_report(PerturbationSpec.translation(0, 0), n)
        result.record(rep.sum_of_zeros == 0, f"base sum n={n}")
        if n % 2 == 0:
            want = Fraction((-1) ** (n // 2), 4 ** (n // 2))
            result.record(rep.product_of_zeros == want, f"base product n={n}")
            result.record(not rep.origin_is_zero, f"base origin n={n}")
        else:
            result.record(rep.product_of_zeros == 0, f"base product n={n}")
            result.record(rep.origin_is_zero, f"base origin n={n}")
    # float Viete against computed zero reports (complex case included)
    for kind, r, value, n in (
        ("translation", 2, Fraction(5, 2), 9),
        ("translation", 5, Fraction(-2), 12),
        ("dilatation", 3, Fraction(-2), 10),
        ("dilatation", 6, Fraction(-1), 18),
    ):
        pert = PerturbationSpec(kind, r, value)
        p = generate(perturbed_spec(pert), n)[n]
        report = all_roots(p, tol=1e-12)
        total = sum(a for _, a in report.real_roots) + sum(
            2 * re for re, _ in report.complex_pairs
        )
        prod = 1.0
        for _, approx in report.real_roots:
            prod *= approx
        for re, im in report.complex_pairs:
            prod *= re * re + im * im
        exact = origin_report(pert, n)
        result.record(
            abs(total - float(exact.sum_of_zeros)) < 1e-9,
            f"float sum {kind} r={r} n={n}",
        )
        result.record(
            abs(prod - float(exact.product_of_zeros)) < 1e-9,
            f"float product {kind} r={r} n={n}",
        )
    return result


GERSH_T_PARAMS = [Fraction(-5, 2), Fraction(-2), Fraction(-3, 2), Fraction(-1),
                  Fraction(-1, 2), Fraction(1, 3), Fraction(1, 2), Fraction(1),
                  Fraction(3, 2), Fraction(2), Fraction(5, 2)]
GERSH_D_PARAMS = [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(9, 4),
                  Fraction(3), Fraction(4), Fraction(7)]


def suite_gershgorin(r_max: int = 5, n_max: int = 12) -> SuiteResult:
    """Computed disc unions equal the closed-form case analysis, and all
    computed zeros sit inside the (inflated) region."""
    result = SuiteResult("gershgorin")
    for kind, r in _pert_grid(r_max):
        params = GERSH_T_PARAMS if kind == "translation" else GERSH_D_PARAMS
        closed = (prop_translation_union if kind == "translation"
                  else prop_dilatation_union)
        for value in params:
            spec = perturbed_spec(PerturbationSpec(kind, r, value))
            polys = generate(spec, n_max)
            for n in range(1, n_max + 1):
                region = gershgorin(spec, n)
                result.record(
                    region == closed(r, value, n),
                    f"{kind} r={r} p={value} n={n} union",
                )
                report = all_roots(polys[n], tol=1e-12)
                ok = all(
                    region.contains_float(approx, 1e-10)
                    for _, approx in report.real_roots
                ) and not report.complex_pairs
                result.record(ok, f"{kind} r={r} p={value} n={n} containment")
    return result


def suite_extremal(r_max: int = 5, k_max: int = 25) -> SuiteResult:
    """Sign and escaped-zero counts around the base family's extremal zeros."""
    result = SuiteResult("extremal")
    t_params = [Fraction(-5, 2), Fraction(-1, 2), Fraction(1, 2), Fraction(5, 2)]
    d_params = [Fraction(-1), Fraction(1, 2), Fraction(3)]
    for kind, r in _pert_grid(r_max):
        params = t_params if kind == "translation" else d_params
        for value in params:
            pert = PerturbationSpec(kind, r, value)
            for k in range(r + 1, k_max + 1):
                rep = extremal_report(pert, k)
                if kind == "translation":
                    sgn = 1 if value > 0 else -1
                    greatest_ref, smallest_ref = -sgn, (-1) ** k * sgn
                else:
                    sgn = 1 if value < 1 else -1
                    greatest_ref, smallest_ref = sgn, (-1) ** k * sgn
                result.record(
                    rep.sign_at_greatest == greatest_ref,
                    f"{kind} r={r} p={value} k={k} sign at greatest",
                )
                result.record(
                    rep.sign_at_smallest == smallest_ref,
                    f"{kind} r={r} p={value} k={k} sign at smallest",
                )
                if kind == "translation":
                    if value > 0:
                        ok = rep.n_above % 2 == 1 and rep.n_below == 0
                    else:
                        ok = rep.n_above == 0 and rep.n_below % 2 == 1
                else:
                    if value < 1:
                        ok = rep.n_above == 0 and rep.n_below == 0
                    else:
                        ok = (rep.n_above == rep.n_below
                              and rep.n_above % 2 == 1)
                result.record(ok, f"{kind} r={r} p={value} k={k} counts")
    # figure anchors
    p17 = generate(perturbed_spec(PerturbationSpec.translation(5, 5)), 17)[17]
    rep17 = all_roots(p17, tol=1e-9)
    result.record(rep17.n_real == 17 and rep17.n_complex_pairs == 0,
                  "degree-17 translation anchor: all real")
    result.record(
        count_real_roots(p17.rational_coeffs(), lo=Fraction(1)) == 1,
        "degree-17 translation anchor: one zero beyond 1",
    )
    p18 = generate(perturbed_spec(PerturbationSpec.dilatation(6, 3)), 18)[18]
    coeffs18 = p18.rational_coeffs()
    result.record(
        count_real_roots(coeffs18, lo=Fraction(1)) == 1
        and count_real_roots(coeffs18, hi=Fraction(-1)) == 1
        and count_real_roots(coeffs18, lo=Fraction(-1), hi=Fraction(1)) == 16,
        "degree-18 dilatation anchor: 16 + 1 + 1 split",
    )
    p18n = generate(perturbed_spec(PerturbationSpec.dilatation(6, -1)), 18)[18]
    rep18n = all_roots(p18n, tol=1e-9)
    result.record(
        rep18n.n_real == 6 and rep18n.n_complex_pairs == 6,
        "degree-18 dilatation anchor: six conjugate pairs",
    )
    return result


def _empirical_origin_class(kind: str, r: int, n: int) -> str:
    if kind == "translation":
        deg_a, deg_b = r, n - r - 1
    else:
        deg_a, deg_b = r - 1, n - r - 1
    origin = CosPoint(1, 2)
    in_a = origin in set(second_kind_zeros(deg_a))
    in_b = origin in set(second_kind_zeros(deg_b))
    common = (in_a or in_b) and origin.is_zero_of_second_kind(n)
    if not (in_a or in_b):
        return "not_interception"
    if in_a and in_b:
        return "double_common_zero" if common else "double_interception"
    return "simple_common_zero" if common else "simple_interception"


def suite_intersections(r_max: int = 8, n_max: int = 40) -> SuiteResult:
    """Interception-point counts, flags, origin parity and coincidence laws."""
    result = SuiteResult("intersections")
    rep = intersection_points("translation", 5, 17)
    result.record(rep.n_distinct == 11, "translation (5,17) point count")
    result.record(
        sum(1 for _, d, c in rep.points if d and c) == 5
        and all(d and c for pt, d, c in rep.points
                if pt in set(second_kind_zeros(5))),
        "translation (5,17) double-common flags",
    )
    rep = intersection_points("dilatation", 6, 18)
    result.record(rep.n_distinct == 11, "dilatation (6,18) point count")
    result.record(
        sum(1 for _, d, _ in rep.points if d) == 5
        and all(not c for _, _, c in rep.points),
        "dilatation (6,18) flags",
    )

    for kind in ("translation", "dilatation"):
        r_lo = 0 if kind == "translation" else 1
        for r in range(r_lo, r_max + 1):
            for n in range(r + 1, n_max + 1):
                report = intersection_points(kind, r, n)
                result.record(
                    report.origin_class == _empirical_origin_class(kind, r, n),
                    f"{kind} r={r} n={n} origin class",
                )
                preds = report.predicates
                coincide = preds.get("all_factor_zeros_double_common",
                                     preds.get("all_factor_zeros_double"))
                if coincide:
                    result.record(
                        report.n_distinct == n - r - 1,
                        f"{kind} r={r} n={n} count law",
                    )
    for r in range(1, 21):
        for n in range(r + 1, 401):
            preds = coincidence_predicates("dilatation", r, n)
            result.record(preds["never_both"], f"dilatation impossibility r={r} n={n}")
    # sampled soundness of the reported points against difference polynomials
    for kind, r, n, p1, p2 in (
        ("translation", 2, 9, Fraction(1), Fraction(-1, 2)),
        ("dilatation", 3, 10, Fraction(3), Fraction(1, 2)),
    ):
        a = product_form(PerturbationSpec(kind, r, p1), n)
        b = product_form(PerturbationSpec(kind, r, p2), n)
        diff = a - b
        report = intersection_points(kind, r, n)
        for pt, _, _ in report.points:
            enc = evaluate_point(diff, pt, 60)
            result.record(enc.contains(0) and enc.width <= Fraction(1, 2**60),
                          f"{kind} r={r} n={n} difference vanishes at ({pt.k},{pt.m})")
        result.record(
            len(real_roots(diff)) == report.n_distinct,
            f"{kind} r={r} n={n} distinct root count",
        )
        ints = _to_int_poly(diff.rational_coeffs())
        square_part = _gcd_int(ints, _derivative_int(ints))
        result.record(
            len(square_part) - 1 == sum(1 for _, d, _ in report.points if d),
            f"{kind} r={r} n={n} double points from gcd",
        )
    return result


def suite_linearization(r_max: int = 6, n_max: int = 20) -> SuiteResult:
    """The degree-r times degree-(n+r) product expands exactly."""
    result = SuiteResult("linearization")
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            lhs, rhs = linearization_check(r, n)
            result.record(lhs.coeffs == rhs.coeffs, f"r={r} n={n}")
    return result


SUITES = {
    "cross_method": suite_cross_method,
    "tables": suite_tables,
    "reconstruction": suite_reconstruction,
    "kind_identities": suite_kind_identities,
    "canonical": suite_canonical,
    "origin_viete": suite_origin_viete,
    "gershgorin": suite_gershgorin,
    "extremal": suite_extremal,
    "intersections": suite_intersections,
    "linearization": suite_linearization,
}


def run_suites(names: list[str] | None = None, r_max: int | None = None,
               n_max: int | None = None, out=None) -> bool:
    """Run the requested suites (all by default); True iff everything passed."""
    import sys

    stream = out if out is not None else sys.stdout
    chosen = names or list(SUITES)
    all_ok = True
    for name in chosen:
        fn = SUITES[name]
        kwargs = {}
        params = fn.__code__.co_varnames[: fn.__code__.co_argcount]
        if r_max is not None and "r_max" in params:
            kwargs["r_max"] = r_max
        if n_max is not None and "n_max" in params:
            kwargs["n_max"] = n_max
        if n_max is not None and "k_max" in params:
            kwargs["k_max"] = n_max
        result = fn(**kwargs)
        stream.write(
            f"suite {result.name:<16} {result.checks:>6} checks, "
            f"{result.failures} failures\n"
        )
        if result.failures:
            stream.write(f"  first witness: {result.witness}\n")
            all_ok = False
    stream.write("ALL PASS\n" if all_ok else "FAIL\n")
    return all_ok
