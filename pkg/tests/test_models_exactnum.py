import random
import unittest
from fractions import Fraction

from src.dependencies.limits import tower_depth_limit
from src.exceptions import (
    DivisionByZero,
    InvalidInput,
    NegativeRadicand,
    TowerLimitExceeded,
    ZeroDenominator,
)
from src.models.exactnum import (
    FieldElem,
    arith,
    format_decimal,
    make_rational,
    parse_rational,
    sign,
    sqrt_adjoin,
    to_interval,
)

SQRT2 = FieldElem(2).sqrt()
SQRT3 = FieldElem(3).sqrt()


class TestRationals(unittest.TestCase):
    def test_make_rational_is_reduced(self):
        self.assertEqual(make_rational(6, -4), Fraction(-3, 2))
        self.assertEqual(make_rational(0, 5), Fraction(0))
        self.assertEqual(make_rational(0, 5).denominator, 1)

    def test_make_rational_zero_denominator(self):
        with self.assertRaises(ZeroDenominator):
            make_rational(1, 0)

    def test_parse_rational(self):
        self.assertEqual(parse_rational("3/4"), Fraction(3, 4))
        self.assertEqual(parse_rational("-6/8"), Fraction(-3, 4))
        self.assertEqual(parse_rational("7"), Fraction(7))
        self.assertEqual(parse_rational(5), Fraction(5))

    def test_parse_rational_rejects_decimals(self):
        with self.assertRaises(InvalidInput):
            parse_rational("0.5")
        with self.assertRaises(InvalidInput):
            parse_rational("abc")
        with self.assertRaises(ZeroDenominator):
            parse_rational("1/0")
        with self.assertRaises(InvalidInput):
            parse_rational("-3/0")


class TestFieldElem(unittest.TestCase):
    def test_rational_arithmetic_stays_rational(self):
        x = FieldElem("1/3") + FieldElem("1/6")
        self.assertTrue(x.is_rational)
        self.assertEqual(x, Fraction(1, 2))
        self.assertEqual(arith(1, 3, "div"), Fraction(1, 3))

    def test_sqrt_of_square_does_not_adjoin(self):
        root = FieldElem("9/4").sqrt()
        self.assertEqual(root.depth, 0)
        self.assertEqual(root, Fraction(3, 2))

    def test_sqrt_squares_back(self):
        self.assertEqual(SQRT2 * SQRT2, 2)
        self.assertTrue((SQRT2 * SQRT2).is_rational)
        self.assertEqual(SQRT2.depth, 1)

    def test_equal_radicals_in_different_towers(self):
        self.assertEqual(FieldElem(12).sqrt(), 2 * SQRT3)
        self.assertEqual(FieldElem(8).sqrt(), 2 * SQRT2)

    def test_no_duplicate_adjunction(self):
        x = SQRT3 + FieldElem(27).sqrt()
        self.assertEqual(x, 4 * SQRT3)
        self.assertEqual(x.depth, 1)

    def test_conjugate_product(self):
        self.assertEqual((1 + SQRT2) * (1 - SQRT2), -1)

    def test_inverse(self):
        self.assertEqual((1 + SQRT2).inverse(), SQRT2 - 1)
        self.assertEqual(1 / (SQRT3 - SQRT2), SQRT3 + SQRT2)

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZero):
            FieldElem(1) / FieldElem(0)
        with self.assertRaises(ZeroDivisionError):
            SQRT2 / (SQRT2 - SQRT2)

    def test_negative_radicand(self):
        with self.assertRaises(NegativeRadicand):
            FieldElem(-2).sqrt()
        with self.assertRaises(NegativeRadicand):
            (1 - SQRT2).sqrt()

    def test_denesting(self):
        self.assertEqual((3 + 2 * SQRT2).sqrt(), 1 + SQRT2)
        self.assertEqual((3 + 2 * SQRT2).sqrt().depth, 1)

    def test_nested_radical(self):
        x = (1 + SQRT2).sqrt()
        self.assertEqual(x.depth, 2)
        self.assertEqual(x * x, 1 + SQRT2)

    def test_sign(self):
        self.assertEqual(sign(SQRT2 - Fraction(3, 2)), -1)
        self.assertEqual(sign(SQRT3 - Fraction(17, 10)), 1)
        self.assertEqual(sign(SQRT2 + SQRT3 - FieldElem(10).sqrt()), -1)
        self.assertEqual(sign(SQRT2 * SQRT3 - FieldElem(6).sqrt()), 0)

    def test_ordering(self):
        values = [SQRT3, FieldElem(1), SQRT2, FieldElem("3/2")]
        self.assertEqual(sorted(values), [FieldElem(1), SQRT2, FieldElem("3/2"), SQRT3])

    def test_parts(self):
        x, y, r = (3 + 2 * FieldElem(5).sqrt()).parts()
        self.assertEqual((x, y, r), (3, 2, 5))

    def test_str(self):
        self.assertEqual(str(SQRT2), "√2")
        self.assertEqual(str(1 - SQRT2), "1 - √2")
        self.assertEqual(str(FieldElem("-3/4")), "-3/4")

    def test_interval_is_certified(self):
        eps = Fraction(1, 10**12)
        lo, hi = to_interval(SQRT2, eps)
        self.assertLessEqual(hi - lo, eps)
        self.assertLessEqual(lo * lo, 2)
        self.assertGreaterEqual(hi * hi, 2)
        self.assertEqual(to_interval(FieldElem("1/3"), eps), (Fraction(1, 3), Fraction(1, 3)))

    def test_interval_of_nested_value(self):
        lo, hi = ((1 + SQRT2).sqrt()).to_interval("1/1000000")
        self.assertLessEqual(hi - lo, Fraction(1, 10**6))
        self.assertLess(Fraction(1553773, 10**6), lo)
        self.assertLess(hi, Fraction(1553775, 10**6))

    def test_field_axioms_on_random_elements(self):
        rng = random.Random(20240214)
        for _ in range(25):
            a = FieldElem(Fraction(rng.randint(-50, 50), rng.randint(1, 20)))
            b = FieldElem(Fraction(rng.randint(-50, 50), rng.randint(1, 20)))
            c = FieldElem(Fraction(rng.randint(1, 50), rng.randint(1, 20)))
            x = a + b * SQRT2
            y = c + a * SQRT3
            self.assertEqual((x + y) * c, x * c + y * c)
            self.assertEqual((x * y) * SQRT2, x * (y * SQRT2))
            if x:
                self.assertEqual(x * x.inverse(), 1)
            self.assertEqual(x - x, 0)


class TestRandomProperties(unittest.TestCase):
    def setUp(self):
        self.rng = random.Random(424242)
        self.sqrt5 = FieldElem(5).sqrt()

    def _rational(self, bound=30):
        return Fraction(self.rng.randint(-bound, bound), self.rng.randint(1, bound))

    def _element(self):
        # a random element of Q(√2, √3, √5)
        return (
            self._rational()
            + self._rational() * SQRT2
            + self._rational() * SQRT3
            + self._rational() * self.sqrt5
            + self._rational() * SQRT2 * SQRT3 * self.sqrt5
        )

    def test_field_axioms_in_depth_three_tower(self):
        for _ in range(15):
            x, y, z = self._element(), self._element(), self._element()
            self.assertEqual(x + y, y + x)
            self.assertEqual(x * y, y * x)
            self.assertEqual((x + y) + z, x + (y + z))
            self.assertEqual((x * y) * z, x * (y * z))
            self.assertEqual(x * (y + z), x * y + x * z)
            self.assertEqual(x + (-x), 0)
            if x:
                self.assertEqual(x * x.inverse(), 1)
                self.assertEqual((y / x) * x, y)

    def test_interval_agrees_with_sign(self):
        eps = Fraction(1, 10**9)
        for _ in range(30):
            x = self._element()
            lo, hi = to_interval(x, eps)
            self.assertLessEqual(hi - lo, eps)
            self.assertGreaterEqual(sign(x - lo), 0)
            self.assertLessEqual(sign(x - hi), 0)
            if sign(x) > 0:
                self.assertGreater(hi, 0)
            elif sign(x) < 0:
                self.assertLess(lo, 0)
            else:
                self.assertTrue(lo <= 0 <= hi)

    def test_sign_is_multiplicative(self):
        for _ in range(30):
            x, y = self._element(), self._element()
            self.assertEqual(sign(x) * sign(y), sign(x * y))

    def test_square_root_squares_back(self):
        values = [2 + SQRT3, FieldElem(8), 1 + SQRT2 * SQRT3]
        for _ in range(10):
            x = abs(self._rational() + self._rational() * SQRT2 + self._rational() * SQRT3)
            if x:
                values.append(x)
        for x in values:
            root = sqrt_adjoin(x)
            self.assertEqual(root * root, x)
            self.assertGreaterEqual(sign(root), 0)

    def test_equality_is_transitive_across_towers(self):
        a = sqrt_adjoin(8) / 2
        c = sqrt_adjoin(18) / 3
        self.assertEqual(a, SQRT2)
        self.assertEqual(SQRT2, c)
        self.assertEqual(a, c)
        for _ in range(10):
            x = self._element()
            y = (x * SQRT2) / SQRT2
            z = x + SQRT3 - SQRT3
            self.assertEqual(x, y)
            self.assertEqual(y, z)
            self.assertEqual(x, z)


class TestTowerLimit(unittest.TestCase):
    def test_adjoining_beyond_limit(self):
        with tower_depth_limit(1):
            x = sqrt_adjoin(2)
            with self.assertRaises(TowerLimitExceeded):
                (1 + x).sqrt()

    def test_merging_beyond_limit(self):
        with tower_depth_limit(1):
            with self.assertRaises(TowerLimitExceeded):
                SQRT2 + SQRT3

    def test_limit_is_restored(self):
        with tower_depth_limit(1):
            pass
        self.assertEqual((SQRT2 + SQRT3).depth, 2)


class TestFormatDecimal(unittest.TestCase):
    def test_rounding_modes(self):
        self.assertEqual(format_decimal(Fraction(-1, 3), 4, "floor"), "-0.3334")
        self.assertEqual(format_decimal(Fraction(-1, 3), 4, "ceil"), "-0.3333")
        self.assertEqual(format_decimal(Fraction(2, 3), 3), "0.667")
        self.assertEqual(format_decimal(Fraction(5), 2), "5.00")
