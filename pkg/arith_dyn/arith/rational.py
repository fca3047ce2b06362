from fractions import Fraction
import numbers

from arith_dyn.exceptions import DivisionByZero


def rat_normalize(num, den=1):
    """Return num/den as a reduced Fraction with positive denominator."""
    if den == 0:
        raise DivisionByZero("zero denominator in {}/{}".format(num, den))
    return Fraction(num, den)


def as_rat(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, numbers.Integral):
        return Fraction(int(value))
    if isinstance(value, numbers.Rational):
        return rat_normalize(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError:
            raise DivisionByZero("zero denominator in {!r}".format(value))
    raise TypeError("not a rational number: {!r}".format(value))
