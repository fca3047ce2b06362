from dataclasses import dataclass
import math

import mpmath

from arith_dyn.arith.polynomial import min_poly

# floor on the error of one double-precision log evaluation
LOG_ERROR = 1e-12


@dataclass(frozen=True)
class HeightValue(object):
    """A real height estimate together with an error bound.

    When ``rigorous`` is set, the true value lies in [value - error,
    value + error].
    """

    value: float
    error: float = 0.0
    rigorous: bool = True

    def __post_init__(self):
        if self.error < 0:
            raise ValueError("negative error bound")

    @property
    def lower(self):
        return self.value - self.error

    @property
    def upper(self):
        return self.value + self.error

    def is_positive(self):
        """True when the value is certified > 0."""
        return self.rigorous and self.lower > 0

    def __add__(self, other):
        return HeightValue(
            self.value + other.value,
            self.error + other.error,
            self.rigorous and other.rigorous,
        )

    def scaled(self, factor):
        return HeightValue(
            self.value * factor, self.error * abs(factor), self.rigorous
        )

    def clamped(self):
        if self.value < 0 and -self.value <= self.error:
            return HeightValue(0.0, self.error, self.rigorous)
        return self


def log_error(value):
    """Rounding bound for a double-precision log that returned ``value``."""
    return max(LOG_ERROR, abs(value) * 2.0 ** -50)


def log_int(n):
    """log |n| for a nonzero integer of any size."""
    return math.log(abs(n))


def abs_height_alg(alpha):
    """Absolute logarithmic height of a rational or quadratic number."""
    poly = min_poly(alpha)
    if poly.degree == 1:
        den, num = poly.coefficients
        m = max(abs(num), abs(den))
        if m == 1:
            return HeightValue(0.0)
        value = log_int(m)
        return HeightValue(value, log_error(value))

    c2, c1, c0 = poly.coefficients
    disc = c1 * c1 - 4 * c2 * c0
    if disc < 0:
        # complex conjugates share |alpha|^2 = c0/c2
        m = max(c2, abs(c0))
        if m == 1:
            return HeightValue(0.0)
        value = log_int(m) / 2
        return HeightValue(value, log_error(value))

    digits = max(len(str(abs(c))) for c in poly.coefficients)
    with mpmath.workdps(40 + 2 * digits):
        s = mpmath.sqrt(disc)
        # larger root without cancellation, the other one from Vieta
        if c1 >= 0:
            big = (-c1 - s) / (2 * c2)
        else:
            big = (-c1 + s) / (2 * c2)
        small = mpmath.mpf(c0) / (c2 * big)
        measure = c2 * max(1, abs(big)) * max(1, abs(small))
        value = float(mpmath.log(measure) / 2)
    return HeightValue(max(value, 0.0), log_error(value))
