from dataclasses import dataclass

import mpmath
import sympy

from arith_dyn.logger import logger


@dataclass(frozen=True)
class SpectralRadius(object):
    """rho(M) in [lower, upper]; ``value`` is the midpoint."""

    value: float
    error: float
    lower: float
    upper: float


def _as_matrix(M):
    M = sympy.Matrix(M)
    if M.rows != M.cols or M.rows == 0:
        raise ValueError("spectral_radius needs a nonempty square matrix")
    if any(not (v.is_Integer) for v in M):
        raise ValueError("spectral_radius needs an integer matrix")
    return M


def modulus_resultant(poly):
    """Res_y(p(y), y^n p(t/y)) for a univariate polynomial p of degree n.

    Its roots are the products of pairs of roots of p, so its largest
    real root is the square of the largest root modulus.
    """
    t, y = sympy.symbols("t y")
    p = poly.as_expr().subs(poly.gen, y)
    n = poly.degree()
    q = sympy.expand(y ** n * p.subs(y, t / y))
    return sympy.Poly(sympy.resultant(p, q, y), t)


def max_root_modulus(poly, eps=1.0e-14):
    """Largest root modulus of a rational polynomial, with validated bounds."""
    R = modulus_resultant(poly).sqf_part()
    intervals = R.intervals(eps=sympy.Rational(str(eps)))
    (lo, hi), _ = max(intervals, key=lambda item: item[0][1])
    lo = max(sympy.Rational(lo), sympy.Integer(0))
    hi = max(sympy.Rational(hi), sympy.Integer(0))
    with mpmath.workdps(40):
        lower = mpmath.sqrt(mpmath.mpf(lo.p) / lo.q)
        upper = mpmath.sqrt(mpmath.mpf(hi.p) / hi.q)
        value = (lower + upper) / 2
        error = (upper - lower) / 2 + abs(value) * mpmath.mpf(2) ** -52
    return SpectralRadius(float(value), float(error), float(lower), float(upper))


def spectral_radius(M, eps=1.0e-14):
    """Largest eigenvalue modulus of an integer matrix.

    The characteristic polynomial comes from fraction-free (Berkowitz)
    elimination; rho^2 is then isolated as the largest real root of its
    modulus resultant to within eps.
    """
    M = _as_matrix(M)
    if M.is_zero_matrix:
        raise ValueError("spectral_radius needs a nonzero matrix")
    y = sympy.Symbol("y")
    rho = max_root_modulus(sympy.Poly(M.charpoly(y).as_expr(), y), eps)
    logger.debug("rho({}) in [{}, {}]".format(M.tolist(), rho.lower, rho.upper))
    return rho
