from fractions import Fraction

import mpmath
import pytest

from lllocal.exceptions import InvalidInputError, PrecisionExhaustedError
from lllocal.solvers.certified import (
    approximate,
    approximate_rational,
    below_exp,
    compare_with_exp,
    compare_with_exp_bits,
)


def exp_rational(k: int, digits: int = 70) -> Fraction:
    """Rational within 10^-(digits-1) of e^k."""
    with mpmath.workdps(digits + 10):
        return Fraction(mpmath.nstr(mpmath.exp(k), digits))


def test_easy_comparisons_settle_at_the_first_rung():
    assert compare_with_exp_bits(1, 1, 1) == (-1, 64)
    assert compare_with_exp(3, 1, 1) == 1
    assert below_exp(Fraction(1, 3), 1)
    assert not below_exp(Fraction(3, 8), 1)


def test_exact_cases_skip_interval_arithmetic():
    assert compare_with_exp_bits(Fraction(1, 2), Fraction(1, 2), 0) == (0, 0)
    assert compare_with_exp_bits(0, 0, 4) == (0, 0)
    assert compare_with_exp_bits(0, 5, -3) == (-1, 0)
    assert compare_with_exp_bits(2, 0, 7) == (1, 0)


def test_negative_sides_rejected():
    with pytest.raises(InvalidInputError):
        compare_with_exp(-1, 1, 1)


@pytest.mark.parametrize("sign", [1, -1])
def test_near_threshold_escalates_precision(sign):
    x = exp_rational(-1) + sign * Fraction(1, 10**30)
    assert compare_with_exp_bits(x, 1, -1) == (sign, 256)


def test_exhausted_ladder_raises():
    x = exp_rational(-2) + Fraction(1, 10**30)
    with pytest.raises(PrecisionExhaustedError) as info:
        compare_with_exp(x, 1, -2, ladder=(64,))
    assert info.value.details["ladder"] == [64]


def test_decimal_renderings():
    assert approximate(0, 1, -1).startswith("0.36787944117144")
    assert approximate(Fraction(1, 4), 0) == "0.25"
    assert approximate_rational(Fraction(1, 3)).startswith("0.3333333333")
