from fractions import Fraction as F

import pytest

from pertcheb import (
    AffineScalar,
    CosPoint,
    InvalidOrder,
    NonRegular,
    PerturbationSpec,
    Polynomial,
    apply_perturbation,
    canonical_cheb_coeff,
    chebyshev_spec,
    closed_form_zeros,
    evaluate,
    evaluate_point,
    generate,
    norm_squared,
    perturbed_spec,
)


def poly(*coeffs):
    return Polynomial.from_coeffs(coeffs)


class TestChebyshevSpecs:
    def test_first_kind_coefficients(self):
        spec = chebyshev_spec("first")
        assert spec.gamma(1).rational_value() == F(1, 2)
        assert all(spec.gamma(i).rational_value() == F(1, 4) for i in range(2, 8))
        assert all(not spec.beta(n) for n in range(8))

    def test_third_kind_coefficients(self):
        spec = chebyshev_spec("third")
        assert spec.beta(0).rational_value() == F(1, 2)
        assert all(not spec.beta(n) for n in range(1, 8))
        assert all(spec.gamma(i).rational_value() == F(1, 4) for i in range(1, 8))

    def test_second_kind_coefficients(self):
        spec = chebyshev_spec("second")
        assert all(not spec.beta(n) for n in range(8))
        assert all(spec.gamma(i).rational_value() == F(1, 4) for i in range(1, 8))


class TestPerturbation:
    def test_order_zero_translation_gives_third_kind(self):
        spec = perturbed_spec(PerturbationSpec.translation(0, F(1, 2)))
        third = chebyshev_spec("third")
        for n in range(10):
            assert spec.beta(n) == third.beta(n)
            assert spec.gamma(n + 1) == third.gamma(n + 1)

    def test_order_one_dilatation_gives_first_kind(self):
        spec = perturbed_spec(PerturbationSpec.dilatation(1, 2))
        first = chebyshev_spec("first")
        for n in range(10):
            assert spec.beta(n) == first.beta(n)
            assert spec.gamma(n + 1) == first.gamma(n + 1)

    def test_zero_translation_is_identity(self):
        spec = perturbed_spec(PerturbationSpec.translation(3, 0))
        base = chebyshev_spec("second")
        for n in range(10):
            assert spec.beta(n) == base.beta(n)
            assert spec.gamma(n + 1) == base.gamma(n + 1)

    def test_dilatation_order_zero_rejected(self):
        with pytest.raises(InvalidOrder):
            PerturbationSpec.dilatation(0, 2)

    def test_dilatation_factor_zero_rejected(self):
        with pytest.raises(NonRegular):
            PerturbationSpec.dilatation(2, 0)

    def test_identity_dilatation_accepted(self):
        spec = perturbed_spec(PerturbationSpec.dilatation(2, 1))
        assert spec.gamma(2).rational_value() == F(1, 4)

    def test_only_second_kind_base(self):
        with pytest.raises(ValueError):
            apply_perturbation(chebyshev_spec("first"),
                               PerturbationSpec.translation(0, 1))


class TestGenerate:
    def test_second_kind_first_four(self):
        got = generate(chebyshev_spec("second"), 3)
        assert got[0] == poly(1)
        assert got[1] == poly(0, 1)
        assert got[2] == poly(F(-1, 4), 0, 1)
        assert got[3] == poly(0, F(-1, 2), 0, 1)

    def test_translated_degree_four(self):
        spec = perturbed_spec(PerturbationSpec.translation(2, 1))
        assert generate(spec, 4)[4] == poly(F(1, 16), F(1, 4), F(-3, 4), -1, 1)

    def test_dilated_degree_three(self):
        spec = perturbed_spec(PerturbationSpec.dilatation(2, 3))
        assert generate(spec, 3)[3] == poly(0, -1, 0, 1)

    @pytest.mark.parametrize("kind,r,param", [
        ("translation", 0, F(1, 2)),
        ("translation", 4, F(-7, 3)),
        ("dilatation", 1, 2),
        ("dilatation", 5, F(-1)),
    ])
    def test_monic_through_degree_40(self, kind, r, param):
        spec = perturbed_spec(PerturbationSpec(kind, r, param))
        assert all(p.is_monic for p in generate(spec, 40)[0:])

    def test_dilatation_symmetry(self):
        spec = perturbed_spec(PerturbationSpec.dilatation(3, F(5, 2)))
        for n, p in enumerate(generate(spec, 25)):
            for k, c in enumerate(p.coeffs):
                if (n - k) % 2 == 1:
                    assert not c, (n, k)

    @pytest.mark.parametrize("kind,r", [("translation", 4), ("dilatation", 4)])
    def test_first_rows_unperturbed(self, kind, r):
        pert = PerturbationSpec(kind, r, F(9, 5))
        base = generate(chebyshev_spec("second"), r)
        got = generate(perturbed_spec(pert), r)
        assert [p.coeffs for p in got] == [p.coeffs for p in base]

    def test_non_regular_generation(self):
        from pertcheb.core import RecurrenceSpec
        from pertcheb.scalars import AFF_ZERO

        broken = RecurrenceSpec("broken", gamma_overrides=((2, AFF_ZERO),))
        with pytest.raises(NonRegular):
            generate(broken, 5)


class TestCanonicalCoefficients:
    def test_spot_values(self):
        assert canonical_cheb_coeff(4, 2) == F(-3, 4)
        assert canonical_cheb_coeff(4, 0) == F(1, 16)
        assert canonical_cheb_coeff(5, 2) == 0
        assert canonical_cheb_coeff(3, 1) == F(-1, 2)

    def test_even_row_constant_terms(self):
        for n in range(10):
            assert canonical_cheb_coeff(2 * n, 0) == F((-1) ** n, 4**n)
            assert canonical_cheb_coeff(2 * n + 1, 0) == 0

    def test_matches_generated_coefficients_to_40(self):
        polys = generate(chebyshev_spec("second"), 40)
        for n in range(41):
            for m in range(n + 1):
                assert canonical_cheb_coeff(n, m) == polys[n].coeff(m).rational_value()


class TestKindRelations:
    def test_first_kind_connection(self):
        second = generate(chebyshev_spec("second"), 22)
        first = generate(chebyshev_spec("first"), 22)
        for n in range(21):
            assert first[n + 2] == second[n + 2] - second[n].scale(F(1, 4))

    def test_third_and_fourth_kind_connections(self):
        second = generate(chebyshev_spec("second"), 21)
        third = generate(chebyshev_spec("third"), 21)
        fourth = generate(chebyshev_spec("fourth"), 21)
        for n in range(20):
            assert third[n + 1] == second[n + 1] - second[n].scale(F(1, 2))
            assert fourth[n + 1] == second[n + 1] + second[n].scale(F(1, 2))


class TestZerosClosedForm:
    def test_second_kind_degree_five(self):
        pts = closed_form_zeros("second", 5)
        assert [(p.k, p.m) for p in pts] == [(5, 6), (2, 3), (1, 2), (1, 3), (1, 6)]
        approx = [p.approx() for p in pts]
        assert approx == sorted(approx)

    def test_first_kind_degree_two(self):
        assert [(p.k, p.m) for p in closed_form_zeros("first", 2)] == [(3, 4), (1, 4)]

    def test_degree_one(self):
        assert [(p.k, p.m) for p in closed_form_zeros("second", 1)] == [(1, 2)]

    def test_third_and_fourth_kind_smallest_cases(self):
        assert [(p.k, p.m) for p in closed_form_zeros("third", 1)] == [(1, 3)]
        assert [(p.k, p.m) for p in closed_form_zeros("fourth", 1)] == [(2, 3)]

    @pytest.mark.parametrize("kind", ["first", "second", "third", "fourth"])
    def test_zeros_certified_by_interval_evaluation(self, kind):
        p = generate(chebyshev_spec(kind), 5)[5]
        for pt in closed_form_zeros(kind, 5):
            enc = evaluate_point(p, pt, 60)
            assert enc.contains(0)
            assert enc.width <= F(1, 2**60)


class TestNormSquared:
    def test_values(self):
        second = chebyshev_spec("second")
        assert norm_squared(second, 3).rational_value() == F(1, 64)
        assert norm_squared(second, 0).rational_value() == 1

    def test_formal_dilatation(self):
        spec = perturbed_spec(PerturbationSpec.dilatation(2, None))
        assert norm_squared(spec, 2) == AffineScalar(F(0), F(1, 16))


class TestEvaluation:
    def test_exact_points(self):
        polys = generate(chebyshev_spec("second"), 2)
        assert evaluate(polys[2], F(1, 2)) == 0
        assert evaluate(polys[0], F(123, 7)) == 1

    def test_interval_width_contract(self):
        p = generate(chebyshev_spec("second"), 9)[9]
        enc = evaluate_point(p, CosPoint(2, 9), 80)
        assert enc.width <= F(1, 2**80)


class TestCosPoint:
    def test_reduction_and_equality(self):
        assert CosPoint(2, 6) == CosPoint(1, 3)
        assert CosPoint(3, 6) == CosPoint(1, 2)

    def test_ordering_follows_x(self):
        pts = sorted([CosPoint(1, 6), CosPoint(5, 6), CosPoint(1, 2)])
        assert [p.approx() for p in pts] == sorted(p.approx() for p in pts)

    def test_lattice_membership(self):
        assert CosPoint(1, 6).is_zero_of_second_kind(5)
        assert CosPoint(1, 6).is_zero_of_second_kind(11)
        assert not CosPoint(1, 6).is_zero_of_second_kind(6)
        assert not CosPoint(0, 1).is_zero_of_second_kind(5)

    def test_json_round_trip(self):
        pt = CosPoint(4, 18)
        assert CosPoint.from_json(pt.to_json()) == pt

    def test_polynomial_json_round_trip(self):
        p = generate(perturbed_spec(PerturbationSpec.translation(1, None)), 6)[6]
        assert Polynomial.from_json(p.to_json()) == p
