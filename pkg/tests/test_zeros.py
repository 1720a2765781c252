import math
from fractions import Fraction as F

import pytest

from pertcheb import (
    NonPositiveGamma,
    PerturbationSpec,
    Polynomial,
    QuadExt,
    ZeroReport,
    all_roots,
    chebyshev_spec,
    count_real_roots,
    extremal_report,
    generate,
    gershgorin,
    jacobi,
    origin_report,
    perturbed_spec,
    prop_dilatation_union,
    prop_translation_union,
    real_roots,
)
from pertcheb.zeros import GershgorinRegion, real_roots_with_multiplicity

SECOND = chebyshev_spec("second")


def poly(*coeffs):
    return Polynomial.from_coeffs([F(c) for c in coeffs])


class TestJacobi:
    def test_second_kind(self):
        m = jacobi(SECOND, 4)
        assert m.diag == (0, 0, 0, 0)
        assert all(a.compare(F(1, 2)) == 0 for a in m.offdiag)

    def test_dilated_offdiagonal(self):
        m = jacobi(perturbed_spec(PerturbationSpec.dilatation(2, 3)), 4)
        root3 = QuadExt.sqrt(3)
        want = [QuadExt.of(F(1, 2)), root3.scale(F(1, 2)), QuadExt.of(F(1, 2))]
        assert all(a.compare(b) == 0 for a, b in zip(m.offdiag, want))

    def test_negative_gamma_rejected(self):
        with pytest.raises(NonPositiveGamma):
            jacobi(perturbed_spec(PerturbationSpec.dilatation(2, -1)), 4)


class TestGershgorin:
    def test_unperturbed_stabilizes(self):
        for n in range(3, 9):
            region = gershgorin(SECOND, n)
            assert region == GershgorinRegion(((QuadExt.of(-1), QuadExt.of(1)),))

    def test_translated_disjoint_piece(self):
        spec = perturbed_spec(PerturbationSpec.translation(2, 3))
        region = gershgorin(spec, 6)
        assert [(str(lo.a), str(hi.a)) for lo, hi in region.intervals] == \
            [("-1", "1"), ("2", "4")]

    def test_dilated_interval(self):
        spec = perturbed_spec(PerturbationSpec.dilatation(1, 2))
        region = gershgorin(spec, 5)
        hi = (QuadExt.of(1) + QuadExt.sqrt(2)).scale(F(1, 2))
        assert region == GershgorinRegion(((-hi, hi),))

    @pytest.mark.parametrize("r", range(0, 6))
    def test_translation_closed_form(self, r):
        for mu in (F(-5, 2), F(-1), F(-1, 2), F(1, 3), F(3, 2), F(3)):
            spec = perturbed_spec(PerturbationSpec.translation(r, mu))
            for n in range(1, 11):
                assert gershgorin(spec, n) == prop_translation_union(r, mu, n)

    @pytest.mark.parametrize("r", range(1, 6))
    def test_dilatation_closed_form(self, r):
        for lam in (F(1, 4), F(3, 4), F(2), F(4), F(9, 2)):
            spec = perturbed_spec(PerturbationSpec.dilatation(r, lam))
            for n in range(1, 11):
                assert gershgorin(spec, n) == prop_dilatation_union(r, lam, n)

    def test_json_round_trip(self):
        region = gershgorin(perturbed_spec(PerturbationSpec.dilatation(2, 5)), 7)
        assert GershgorinRegion.from_json(region.to_json()) == region


class TestRealRoots:
    def test_degree_five_chebyshev(self):
        ivs = real_roots(generate(SECOND, 5)[5])
        expected = sorted(math.cos(math.pi * k / 6) for k in range(1, 6))
        assert len(ivs) == 5
        for iv, want in zip(ivs, expected):
            assert float(iv.lo) - 1e-12 <= want <= float(iv.hi) + 1e-12
        assert ivs[1].lo == F(-1, 2) and ivs[3].lo == F(1, 2)  # exact rationals

    def test_rational_roots_detected_exactly(self):
        ivs = real_roots(poly(0, -1, 0, 1))  # x^3 - x
        assert [(iv.lo, iv.hi) for iv in ivs] == \
            [(F(-1), F(-1)), (F(0), F(0)), (F(1), F(1))]

    def test_no_real_roots(self):
        assert real_roots(poly(1, 0, 1)) == []

    def test_multiplicity(self):
        # (x - 1)^2 (x + 2) = x^3 - 3x + 2
        cubed = [F(c) for c in (2, -3, 0, 1)]
        entries = real_roots_with_multiplicity(cubed)
        assert [(iv.lo, mult) for iv, mult in entries] == [(F(-2), 1), (F(1), 2)]

    def test_non_dyadic_rational_root(self):
        ivs = real_roots(poly(F(-1, 3), 1))  # x - 1/3
        assert ivs == [type(ivs[0])(F(1, 3), F(1, 3))]

    def test_requested_width(self):
        width = F(1, 2**60)
        ivs = real_roots(poly(-2, 0, 1), width)  # x^2 - 2
        assert len(ivs) == 2
        assert all(iv.width <= width for iv in ivs)


class TestAllRoots:
    def test_sqrt_two(self):
        report = all_roots(poly(-2, 0, 1))
        assert report.n_real == 2 and report.n_complex_pairs == 0

    def test_all_real_translation_figure(self):
        p = generate(perturbed_spec(PerturbationSpec.translation(5, 5)), 17)[17]
        report = all_roots(p, tol=1e-9)
        assert report.n_real == 17 and report.n_complex_pairs == 0

    def test_complex_pairs_dilatation_figure(self):
        p = generate(perturbed_spec(PerturbationSpec.dilatation(6, -1)), 18)[18]
        report = all_roots(p, tol=1e-9)
        assert report.n_real == 6 and report.n_complex_pairs == 6
        floats = [float(c) for c in p.rational_coeffs()]
        norm = math.sqrt(sum(c * c for c in floats))
        for re, im in report.complex_pairs:
            z = complex(re, im)
            value = 0j
            for c in reversed(floats):
                value = value * z + c
            assert abs(value) <= 1e-9 * norm

    def test_report_json_round_trip(self):
        p = generate(perturbed_spec(PerturbationSpec.dilatation(2, -3)), 6)[6]
        report = all_roots(p)
        again = ZeroReport.from_json(report.to_json())
        assert again.n_real == report.n_real
        assert again.complex_pairs == report.complex_pairs

    @pytest.mark.parametrize("kind,r,param", [
        ("translation", 0, F(7, 2)),
        ("translation", 3, F(-4, 3)),
        ("dilatation", 2, F(1, 3)),
        ("dilatation", 4, F(6)),
    ])
    def test_positive_definite_specs_have_all_real_zeros(self, kind, r, param):
        spec = perturbed_spec(PerturbationSpec(kind, r, param))
        for n in range(1, 31, 7):
            p = generate(spec, n)[n]
            assert count_real_roots(p.rational_coeffs()) == n


class TestOriginReport:
    def test_translation_sum(self):
        rep = origin_report(PerturbationSpec.translation(2, 1), 4)
        assert rep.sum_of_zeros == 1
        assert not rep.origin_is_zero

    def test_translation_even_product(self):
        for r in (0, 1, 4):
            for m in (1, 2, 5):
                rep = origin_report(PerturbationSpec.translation(r, F(3, 2)), 2 * m)
                assert rep.product_of_zeros == F((-1) ** m, 4**m)
                assert not rep.origin_is_zero

    def test_dilatation_odd_always_zero(self):
        for r in (1, 2, 5):
            for n in (1, 3, 7, 15):
                rep = origin_report(PerturbationSpec.dilatation(r, 5), n)
                assert rep.origin_is_zero
                assert rep.sum_of_zeros == 0

    def test_unperturbed_base_cases(self):
        rep = origin_report(PerturbationSpec.translation(0, 0), 8)
        assert rep.sum_of_zeros == 0 and rep.product_of_zeros == F(1, 256)

    def test_json_round_trip(self):
        from pertcheb import OriginReport

        rep = origin_report(PerturbationSpec.translation(3, F(-7, 2)), 9)
        assert OriginReport.from_json(rep.to_json()) == rep


class TestExtremalReport:
    def test_translation_figure_case(self):
        rep = extremal_report(PerturbationSpec.translation(5, 5), 17)
        assert rep.sign_at_greatest == -1
        assert rep.n_above == 1 and rep.n_below == 0

    def test_dilatation_figure_case(self):
        rep = extremal_report(PerturbationSpec.dilatation(6, 3), 18)
        assert rep.n_above == 1 and rep.n_below == 1

    def test_dilatation_contracting_case(self):
        for k in (7, 12, 19):
            rep = extremal_report(PerturbationSpec.dilatation(6, F(1, 2)), k)
            assert rep.n_above == 0 and rep.n_below == 0

    def test_degree_must_exceed_order(self):
        with pytest.raises(ValueError):
            extremal_report(PerturbationSpec.translation(5, 1), 4)
