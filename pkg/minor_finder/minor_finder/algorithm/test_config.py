from fractions import Fraction
from unittest import TestCase

from ..exceptions import ValidationError
from .config import Config, GFunction, default_g


class TestDefaultG(TestCase):
    """Test Cases"""

    def test_exact_small_values(self) -> None:
        self.assertEqual(default_g(3), 2)
        self.assertEqual(default_g(4), 4)
        self.assertEqual(default_g(7), 10)

    def test_trivial_orders(self) -> None:
        self.assertEqual(default_g(1), 1)
        self.assertEqual(default_g(2), 1)

    def test_undefined_order(self) -> None:
        with self.assertRaises(ValidationError):
            default_g(0)

    def test_non_decreasing(self) -> None:
        values = [default_g(t) for t in range(1, 40)]
        self.assertEqual(values, sorted(values))
        self.assertTrue(all(isinstance(value, Fraction) for value in values))


class TestGFunction(TestCase):
    def test_table_overrides_default(self) -> None:
        g = GFunction({4: Fraction(9, 2)})
        self.assertEqual(g(4), Fraction(9, 2))
        self.assertEqual(g(3), 2)

    def test_decreasing_table_warns(self) -> None:
        with self.assertLogs("minor_finder", level="WARNING") as logs:
            GFunction({4: Fraction(1)})
        self.assertIn("decreasing at t=4", logs.output[0])


class TestConfig(TestCase):
    def test_threshold(self) -> None:
        cfg = Config(t=4, epsilon=Fraction(2))
        self.assertEqual(cfg.g_value, 4)
        self.assertEqual(cfg.threshold, 16)
        self.assertEqual(cfg.strict_bound, 4)
        self.assertTrue(cfg.meets_strict_bound())

    def test_epsilon_becomes_fraction(self) -> None:
        cfg = Config(t=3, epsilon=3)
        self.assertIsInstance(cfg.epsilon, Fraction)
        self.assertEqual(cfg.threshold, 10)

    def test_t_too_small(self) -> None:
        with self.assertRaises(ValidationError):
            Config(t=2, epsilon=Fraction(1)).validate()

    def test_epsilon_not_positive(self) -> None:
        with self.assertRaises(ValidationError):
            Config(t=4, epsilon=Fraction(0)).validate()

    def test_strict_gate(self) -> None:
        # g(3) = 2 < max(3, 2) = 3
        with self.assertRaises(ValidationError):
            Config(t=3, epsilon=Fraction(3), strict=True).validate()

    def test_non_strict_waiver_is_logged(self) -> None:
        with self.assertLogs("minor_finder", level="WARNING") as logs:
            Config(t=3, epsilon=Fraction(3)).validate()
        self.assertIn("proceeding without the guarantee", logs.output[-1])
