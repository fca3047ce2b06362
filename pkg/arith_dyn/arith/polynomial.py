from dataclasses import dataclass
from fractions import Fraction
import math
from typing import Tuple

from arith_dyn.arith.quadratic import QuadExt


@dataclass(frozen=True)
class IntPoly(object):
    """Primitive integer polynomial, coefficients listed from the leading one."""

    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if len(coeffs) < 2 or coeffs[0] == 0:
            raise ValueError("IntPoly needs degree >= 1: {}".format(coeffs))
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def primitive(cls, coefficients):
        """Scale rational coefficients to a primitive integer polynomial."""
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
        den = 1
        for c in coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        content = math.gcd(*ints)
        if ints[0] < 0:
            content = -content
        return cls(tuple(i // content for i in ints))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    @property
    def leading(self):
        return self.coefficients[0]

    def __call__(self, value):
        acc = 0
        for c in self.coefficients:
            acc = acc * value + c
        return acc

    def discriminant(self):
        if self.degree != 2:
            raise ValueError("discriminant is only used for quadratics")
        a, b, c = self.coefficients
        return b * b - 4 * a * c

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            e = self.degree - i
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                mono = "x" if e == 1 else "x^{}".format(e)
                body = mono if mag == 1 else "{}*{}".format(mag, mono)
            terms.append((sign, body))
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += " {} {}".format(sign, body)
        return text


def min_poly(alpha):
    """Minimal polynomial over Z of a rational or quadratic number."""
    if isinstance(alpha, QuadExt):
        # (x - alpha)(x - conj(alpha)) = x^2 - trace*x + norm
        return IntPoly.primitive([1, -alpha.trace(), alpha.norm()])
    return IntPoly.primitive([1, -Fraction(alpha)])
