"""
Certified comparisons between exact rationals and rationals times powers of e.

Every LLL-type inequality in this package reduces to the sign of
x - y·e^a for non-negative rationals x, y and an integer a. When a ≠ 0 and
x, y > 0 the sign is never zero (e^a is irrational), so interval enclosures at
increasing precision always separate the two sides eventually; the
configured cap turns a pathological case into an error instead of a guess.
"""
import logging
import threading
from fractions import Fraction
from functools import lru_cache

import mpmath
from mpmath import iv

from lllocal.config import app_cfg
from lllocal.exceptions import InvalidInputError, PrecisionExhaustedError

logger = logging.getLogger(__name__)

# iv.prec is process-global
_IV_LOCK = threading.Lock()

REPORT_DIGITS = 20


def _rational_interval(value: Fraction):
    return iv.mpf(value.numerator) / value.denominator


def _interval_sign(x: Fraction, y: Fraction, a: int, bits: int) -> int:
    """Sign of x - y·e^a at the given precision, or 0 if the enclosure straddles zero."""
    with _IV_LOCK:
        saved = iv.prec
        iv.prec = bits
        try:
            diff = _rational_interval(x) - _rational_interval(y) * iv.exp(a)
            if diff.a > 0:
                return 1
            if diff.b < 0:
                return -1
            return 0
        finally:
            iv.prec = saved


@lru_cache(maxsize=1 << 16)
def _certified_sign(x: Fraction, y: Fraction, a: int, ladder: tuple[int, ...]) -> tuple[int, int]:
    for bits in ladder:
        sign = _interval_sign(x, y, a, bits)
        if sign:
            return sign, bits
        logger.debug(f"Comparison of {x} with {y}·e^{a} undecided at {bits} bits")
    raise PrecisionExhaustedError(
        f"Could not separate {x} from {y}·e^{a} at {ladder[-1]} bits",
        details={"x": str(x), "y": str(y), "a": a, "ladder": list(ladder)},
    )


def compare_with_exp(
    x: Fraction | int, y: Fraction | int, a: int, ladder: tuple[int, ...] | list[int] | None = None
) -> int:
    """Sign of x - y·e^a, decided exactly when possible and by interval arithmetic otherwise."""
    sign, _ = compare_with_exp_bits(x, y, a, ladder)
    return sign


def compare_with_exp_bits(
    x: Fraction | int, y: Fraction | int, a: int, ladder: tuple[int, ...] | list[int] | None = None
) -> tuple[int, int]:
    """Like compare_with_exp, also returning the precision used (0 for exact decisions)."""
    x, y = Fraction(x), Fraction(y)
    if x < 0 or y < 0:
        raise InvalidInputError(f"Certified comparison expects non-negative sides, got {x} and {y}")
    if y == 0 or a == 0:
        exact = x - y
        return (exact > 0) - (exact < 0), 0
    if x == 0:
        return -1, 0
    steps = tuple(ladder) if ladder else tuple(app_cfg.precision_steps())
    return _certified_sign(x, y, a, steps)


def below_exp(x: Fraction | int, k: int, ladder=None) -> bool:
    """x < e^(-k)."""
    return compare_with_exp(x, 1, -k, ladder) < 0


def approximate(x: Fraction | int, y: Fraction | int = 1, a: int = 0) -> str:
    """Decimal rendering of y·e^a (or of x when y is zero), for reports only."""
    with mpmath.workdps(REPORT_DIGITS + 5):
        if Fraction(y) == 0:
            value = mpmath.mpf(Fraction(x).numerator) / Fraction(x).denominator
        else:
            y = Fraction(y)
            value = mpmath.mpf(y.numerator) / y.denominator * mpmath.exp(a)
        return mpmath.nstr(value, REPORT_DIGITS)


def approximate_rational(x: Fraction | int) -> str:
    x = Fraction(x)
    with mpmath.workdps(REPORT_DIGITS + 5):
        return mpmath.nstr(mpmath.mpf(x.numerator) / x.denominator, REPORT_DIGITS)
