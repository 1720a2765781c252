import random
from fractions import Fraction as F

import pytest

from pertcheb import AffineOverflow, AffineScalar, Interval, QuadExt, quad_compare
from pertcheb.errors import MixedRadicand


def affine(c, l=0):
    return AffineScalar(F(c), F(l))


class TestAffineScalar:
    def test_scalar_scaling(self):
        assert affine(0, 1) * affine(F(1, 4)) == affine(0, F(1, 4))

    def test_formal_square_overflows(self):
        with pytest.raises(AffineOverflow):
            affine(0, 1) * affine(0, 1)

    def test_one_minus_parameter_times_sixteenth(self):
        # (1 - p) / 16
        assert affine(1, -1) * affine(F(1, 16)) == affine(F(1, 16), F(-1, 16))

    def test_instantiate(self):
        assert affine(0, -1).instantiate(5) == -5
        assert affine(F(1, 4), F(-1, 4)).instantiate(1) == 0
        assert affine(0, F(-1, 64)).instantiate(3) == F(-3, 64)

    def test_instantiate_commutes_with_arithmetic(self):
        rng = random.Random(7)
        for _ in range(200):
            a = AffineScalar(F(rng.randint(-9, 9), rng.randint(1, 9)),
                             F(rng.randint(-9, 9), rng.randint(1, 9)))
            b = AffineScalar(F(rng.randint(-9, 9), rng.randint(1, 9)))
            v = F(rng.randint(-9, 9), rng.randint(1, 9))
            assert (a + b).instantiate(v) == a.instantiate(v) + b.instantiate(v)
            assert (a - b).instantiate(v) == a.instantiate(v) - b.instantiate(v)
            assert (a * b).instantiate(v) == a.instantiate(v) * b.instantiate(v)

    def test_rational_field_properties(self):
        rng = random.Random(11)
        for _ in range(300):
            x = F(rng.randint(-50, 50), rng.randint(1, 50))
            y = F(rng.randint(-50, 50), rng.randint(1, 50))
            assert (x + y) - y == x
            if y:
                assert (x * y) / y == x

    def test_json_round_trip(self):
        a = affine(F(-3, 7), F(5, 2))
        assert AffineScalar.from_json(a.to_json()) == a


class TestQuadExt:
    def test_silver_ratio_vs_one(self):
        x = (QuadExt.of(1) + QuadExt.sqrt(2)).scale(F(1, 2))  # (1+sqrt(2))/2
        assert quad_compare(x, 1) > 0

    def test_perfect_square_collapses(self):
        x = QuadExt(F(0), F(1), F(1, 4))
        assert x.is_rational
        assert quad_compare(x, F(1, 2)) == 0

    def test_sqrt_three_bound(self):
        x = (QuadExt.of(1) + QuadExt.sqrt(3)).scale(F(1, 2))
        assert quad_compare(x, F(27, 20)) > 0

    def test_agrees_with_floats_when_gap_is_large(self):
        rng = random.Random(3)
        for _ in range(500):
            a = F(rng.randint(-8, 8), rng.randint(1, 8))
            b = F(rng.randint(-8, 8), rng.randint(1, 8))
            rad = F(rng.randint(0, 30))
            x = QuadExt(a, b, rad)
            q = F(rng.randint(-20, 20), rng.randint(1, 8))
            gap = float(x) - float(q)
            if abs(gap) > 1e-9:
                assert quad_compare(x, q) == (1 if gap > 0 else -1)

    def test_mixed_radicands_rejected(self):
        with pytest.raises(MixedRadicand):
            QuadExt.sqrt(2) + QuadExt.sqrt(3)

    def test_json_round_trip(self):
        x = QuadExt(F(1, 2), F(-1, 2), F(5))
        assert QuadExt.from_json(x.to_json()).compare(x) == 0


class TestInterval:
    def test_arithmetic(self):
        a = Interval(F(1), F(2))
        b = Interval(F(-1), F(1, 2))
        assert (a + b) == Interval(F(0), F(5, 2))
        assert (a * b) == Interval(F(-2), F(1))

    def test_sign(self):
        assert Interval(F(1, 4), F(1, 2)).sign() == 1
        assert Interval(F(-1), F(-1, 2)).sign() == -1
        assert Interval(F(0), F(0)).sign() == 0
        assert Interval(F(-1), F(1)).sign() is None

    def test_dyadic_rounding_is_outward(self):
        iv = Interval(F(1, 3), F(2, 3)).round_dyadic(8)
        assert iv.lo <= F(1, 3) and iv.hi >= F(2, 3)
        assert iv.lo.denominator <= 256 and iv.hi.denominator <= 256
