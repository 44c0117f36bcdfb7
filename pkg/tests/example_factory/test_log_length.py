"""Tests for exact logarithms a·π + b."""

import math
from fractions import Fraction

import pytest

from conformal_type_lab.example_factory import LogLength, SymbolicCount
from conformal_type_lab.example_factory.log_length import PI_LOWER, PI_UPPER


class TestSign:
    """Signs decided with rational bounds on π."""

    @pytest.mark.parametrize("a, b, expected", [
        (1, -3, 1),
        (1, Fraction(-22, 7), -1),
        (0, 0, 0),
        (0, Fraction(-1, 5), -1),
        (-2, 7, 1),
    ])
    def test_sign(self, a, b, expected: int) -> None:
        assert LogLength.of(a, b).sign() == expected

    def test_undecided(self) -> None:
        with pytest.raises(ArithmeticError):
            LogLength.of(1, -(PI_LOWER + PI_UPPER) / 2).sign()

    def test_huge_coefficient_dominates(self) -> None:
        value = LogLength(SymbolicCount.power_of_two(1000), Fraction(-10 ** 9))

        assert value.sign() == 1
        assert (-value.a_pi).sign() == -1


class TestArithmetic:
    """Sums, scaling and comparisons."""

    def test_compare(self) -> None:
        assert LogLength.of(2) > LogLength.of(1, 3)
        assert LogLength.of(1, 3) < LogLength.of(1, 4)
        assert LogLength.of(1, 1) <= LogLength.of(1, 1)

    def test_add_and_scale(self) -> None:
        total = LogLength.of(1, 2) + LogLength.of(3, Fraction(1, 2))

        assert total == LogLength.of(4, Fraction(5, 2))
        assert LogLength.of(1, 2).scaled(3) == LogLength.of(3, 6)
        assert (total - total).sign() == 0

    def test_approx(self) -> None:
        assert LogLength.of(2, 1).approx() == pytest.approx(2 * math.pi + 1)
        assert LogLength(SymbolicCount.power_of_two(2000)).approx() == math.inf

    def test_to_dict_and_str(self) -> None:
        value = LogLength.of(1, Fraction(1, 2))

        assert value.to_dict() == {"a_pi": 1, "b": {"num": 1, "den": 2}}
        assert str(value) == "(1)*pi + 1/2"
