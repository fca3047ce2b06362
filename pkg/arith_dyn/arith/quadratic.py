from dataclasses import dataclass
from fractions import Fraction
import functools
import numbers

import sympy

from arith_dyn.arith.rational import as_rat
from arith_dyn.exceptions import DivisionByZero
from arith_dyn.exceptions import FieldMismatch


@functools.lru_cache(maxsize=1024)
def squarefree_decomposition(D):
    """Split D = kernel * root**2 with kernel squarefree (sign kept on it)."""
    D = int(D)
    if D == 0:
        raise ValueError("D must be nonzero")
    kernel = -1 if D < 0 else 1
    root = 1
    for p, e in sympy.factorint(abs(D)).items():
        root *= p ** (e // 2)
        if e % 2:
            kernel *= p
    return kernel, root


@dataclass(frozen=True, eq=False)
class QuadExt(object):
    """The number a + b*sqrt(D) with D squarefree, D != 1 and b != 0.

    Build values with quad_reduce(); arithmetic falls back to a Fraction
    whenever the irrational part cancels.
    """

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        if not isinstance(self.a, Fraction):
            object.__setattr__(self, "a", as_rat(self.a))
        if not isinstance(self.b, Fraction):
            object.__setattr__(self, "b", as_rat(self.b))
        if self.b == 0 or self.D in (0, 1):
            raise ValueError("degenerate quadratic value; use quad_reduce")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.D != self.D:
                raise FieldMismatch(
                    "cannot mix Q(sqrt({})) and Q(sqrt({}))".format(
                        self.D, other.D
                    )
                )
            return other.a, other.b
        if isinstance(other, (Fraction, numbers.Integral)):
            return Fraction(other), Fraction(0)
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return _make(self.a + c[0], self.b + c[1], self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __pos__(self):
        return self

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return _make(self.a - c[0], self.b - c[1], self.D)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return _make(c[0] - self.a, c[1] - self.b, self.D)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        x, y = c
        return _make(
            self.a * x + self.D * self.b * y,
            self.a * y + self.b * x,
            self.D,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        return _make(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        if isinstance(other, QuadExt):
            return self * other.inverse()
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        if c[0] == 0:
            raise DivisionByZero("division of {} by zero".format(self))
        return _make(self.a / c[0], self.b / c[0], self.D)

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return self.inverse() * c[0]

    def __pow__(self, n):
        if not isinstance(n, numbers.Integral):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Fraction(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.D)

    def norm(self):
        return self.a * self.a - self.D * self.b * self.b

    def trace(self):
        return 2 * self.a

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        if isinstance(other, (Fraction, numbers.Integral)):
            return False
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        if eq is NotImplemented:
            return eq
        return not eq

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return True

    def __str__(self):
        return "{}{}{}*sqrt({})".format(
            self.a if self.a else "",
            "-" if self.b < 0 else ("+" if self.a else ""),
            abs(self.b),
            self.D,
        )

    def __repr__(self):
        return "QuadExt({})".format(self)


def _make(a, b, D):
    if b == 0:
        return a
    return QuadExt(a, b, D)


def quad_reduce(a, b, D):
    """Normalize a + b*sqrt(D): squarefree D, rational result when b*sqrt(D) is."""
    a = as_rat(a)
    b = as_rat(b)
    D = int(D)
    if D == 0:
        raise ValueError("D must be nonzero")
    kernel, root = squarefree_decomposition(D)
    b = b * root
    if b == 0:
        return a
    if kernel == 1:
        return a + b
    return QuadExt(a, b, kernel)


def sqrt_rat(q):
    """sqrt(q) for a rational q, as an AlgNum."""
    q = as_rat(q)
    if q == 0:
        return Fraction(0)
    # sqrt(p/r) = sqrt(p*r)/r
    return quad_reduce(0, Fraction(1, q.denominator), q.numerator * q.denominator)


def field_of(x):
    """D of the quadratic field holding x, or None for a rational."""
    if isinstance(x, QuadExt):
        return x.D
    return None


def conjugate(x):
    if isinstance(x, QuadExt):
        return x.conjugate()
    return x


def alg_key(x):
    """Total order key used for deterministic sorting of AlgNum values."""
    if isinstance(x, QuadExt):
        return (x.D, x.a, x.b)
    return (0, Fraction(x), Fraction(0))


def bit_size(x):
    """Largest numerator/denominator bit length inside an AlgNum."""
    if isinstance(x, QuadExt):
        parts = (x.a, x.b)
    else:
        parts = (Fraction(x),)
    return max(
        max(abs(p.numerator).bit_length(), p.denominator.bit_length())
        for p in parts
    )
