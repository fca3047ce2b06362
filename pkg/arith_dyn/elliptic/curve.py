from dataclasses import dataclass
from fractions import Fraction
import re
from typing import Optional

from arith_dyn.arith import alg_key
from arith_dyn.arith import as_rat
from arith_dyn.arith import field_of
from arith_dyn.arith import parse_algnum
from arith_dyn.exceptions import InvalidPoint
from arith_dyn.exceptions import ParseError
from arith_dyn.exceptions import SingularCurve
from arith_dyn.projective import P1
from arith_dyn.projective import point_canonicalize


@dataclass(frozen=True)
class EllipticCurve(object):
    """y^2 = x^3 + a x + b over Q."""

    a: int
    b: int

    def __post_init__(self):
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "b", int(self.b))
        if 4 * self.a ** 3 + 27 * self.b ** 2 == 0:
            raise SingularCurve("{} is singular".format(self))

    @classmethod
    def parse(cls, text):
        """'a b', 'E: a b' or 'a,b'."""
        body = re.sub(r"^\s*E\s*:", "", text)
        parts = [p for p in re.split(r"[\s,]+", body.strip()) if p]
        if len(parts) != 2:
            raise ParseError(
                "expected two integers 'a b', got {!r}".format(text), text=text
            )
        try:
            return cls(int(parts[0]), int(parts[1]))
        except ValueError:
            raise ParseError("non-integer coefficient in {!r}".format(text), text=text)

    @property
    def discriminant(self):
        return -16 * (4 * self.a ** 3 + 27 * self.b ** 2)

    def rhs(self, x):
        return x * x * x + self.a * x + self.b

    def contains(self, point):
        if point.is_zero:
            return True
        return point.y * point.y == self.rhs(point.x)

    def __str__(self):
        return "y^2 = x^3 {} {}x {} {}".format(
            "-" if self.a < 0 else "+",
            abs(self.a),
            "-" if self.b < 0 else "+",
            abs(self.b),
        )


@dataclass(frozen=True)
class EllPoint(object):
    """Affine (x, y) or the identity O (both coordinates None)."""

    x: Optional[object] = None
    y: Optional[object] = None

    @property
    def is_zero(self):
        return self.x is None

    @property
    def field(self):
        if self.is_zero:
            return None
        return field_of(self.x) or field_of(self.y)

    def sort_key(self):
        if self.is_zero:
            return (0,)
        return (1, alg_key(self.x), alg_key(self.y))

    def __str__(self):
        if self.is_zero:
            return "O"
        return "({}, {})".format(self.x, self.y)


O = EllPoint()


def ell_point(curve, x, y):
    """Checked affine point of ``curve``."""
    x = x if field_of(x) else as_rat(x)
    y = y if field_of(y) else as_rat(y)
    point = EllPoint(x, y)
    if not curve.contains(point):
        raise InvalidPoint("{} is not on {}".format(point, curve))
    return point


def parse_ell_point(curve, text):
    """'O', '(2, 3)' or '2,3' with rational or quadratic coordinates."""
    text = text.strip()
    if text in ("O", "0", "inf", "oo"):
        return O
    body = text[1:-1] if text.startswith("(") and text.endswith(")") else text
    parts = [p for p in body.split(",")]
    if len(parts) != 2:
        raise ParseError("expected 'x, y', got {!r}".format(text), text=text)
    return ell_point(curve, parse_algnum(parts[0]), parse_algnum(parts[1]))


def ell_neg(P):
    if P.is_zero:
        return P
    return EllPoint(P.x, -P.y)


def ell_add(curve, P, Q):
    """Chord-tangent sum."""
    if P.is_zero:
        return Q
    if Q.is_zero:
        return P
    if P.x == Q.x:
        if P.y == -Q.y:
            return O
        lam = (3 * P.x * P.x + curve.a) / (2 * P.y)
    else:
        lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    y3 = lam * (P.x - x3) - P.y
    return EllPoint(x3, y3)


def ell_mul(curve, n, P):
    """[n]P by double-and-add; negative n goes through -P."""
    if n < 0:
        return ell_mul(curve, -n, ell_neg(P))
    result = O
    addend = P
    while n:
        if n & 1:
            result = ell_add(curve, result, addend)
        n >>= 1
        if n:
            addend = ell_add(curve, addend, addend)
    return result


def ell_order(curve, P, ceiling=12):
    """Smallest n <= ceiling with [n]P = O, or None."""
    Q = P
    for n in range(1, ceiling + 1):
        if Q.is_zero:
            return n
        Q = ell_add(curve, Q, P)
    return None


def x_projection(P):
    """x-coordinate as a point of P^1; O goes to infinity."""
    if P.is_zero:
        return point_canonicalize([[Fraction(1), Fraction(0)]], P1)
    return point_canonicalize([[P.x, Fraction(1)]], P1)
