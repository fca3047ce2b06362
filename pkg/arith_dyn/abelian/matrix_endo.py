from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import numpy as np
import sympy

from arith_dyn.arith import sqrt_rat
from arith_dyn.degrees import DegreeSource
from arith_dyn.degrees import DynDegree
from arith_dyn.degrees import spectral_radius
from arith_dyn.elliptic import EllipticCurve
from arith_dyn.elliptic import EllPoint
from arith_dyn.elliptic import O
from arith_dyn.elliptic import ell_add
from arith_dyn.elliptic import ell_mul
from arith_dyn.elliptic import ell_order
from arith_dyn.exceptions import InsufficientGenerators
from arith_dyn.exceptions import InvalidPoint
from arith_dyn.exceptions import InvariantViolation
from arith_dyn.exceptions import ParseError
from arith_dyn.heights import neron_tate
from arith_dyn.logger import logger


@dataclass(frozen=True)
class MatrixEndo(object):
    """F = tau_a o M on E^g: Q_i = a_i + sum_j [M_ij] P_j."""

    curve: EllipticCurve
    matrix: Tuple[Tuple[int, ...], ...]
    translation: Tuple[EllPoint, ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.matrix)
        g = len(rows)
        if g == 0 or any(len(row) != g for row in rows):
            raise ValueError("matrix must be square")
        if all(v == 0 for row in rows for v in row):
            raise ValueError("matrix must be nonzero")
        object.__setattr__(self, "matrix", rows)
        translation = tuple(self.translation) or (O,) * g
        if len(translation) != g:
            raise ValueError("translation needs {} points".format(g))
        for a in translation:
            if not self.curve.contains(a):
                raise InvalidPoint("translation {} is not on {}".format(a, self.curve))
        object.__setattr__(self, "translation", translation)

    @property
    def g(self):
        return len(self.matrix)

    @property
    def sympy_matrix(self):
        return sympy.Matrix(self.matrix)

    def apply(self, points):
        return matrix_endo_apply(self, points)

    def dynamical_degree(self):
        return matrix_endo_dyn_degree(self)


def parse_matrix(text):
    """'2,0;0,3' or '[[2,0],[0,3]]' or '2' (a 1x1 matrix)."""
    body = text.strip().replace("[[", "").replace("]]", "").replace("],[", ";")
    body = body.replace("[", "").replace("]", "")
    try:
        rows = [
            tuple(int(v) for v in row.replace(",", " ").split())
            for row in body.split(";")
        ]
    except ValueError:
        raise ParseError("bad integer matrix {!r}".format(text), text=text)
    if not rows or any(len(row) != len(rows) for row in rows):
        raise ParseError("matrix {!r} is not square".format(text), text=text)
    return tuple(rows)


def matrix_endo_apply(F, points):
    points = tuple(points)
    if len(points) != F.g:
        raise InvalidPoint("expected a {}-tuple of points".format(F.g))
    result = []
    for i, row in enumerate(F.matrix):
        Q = F.translation[i]
        for m, P in zip(row, points):
            if m:
                Q = ell_add(F.curve, Q, ell_mul(F.curve, m, P))
        result.append(Q)
    return tuple(result)


def matrix_endo_dyn_degree(F, eps=1.0e-14):
    """delta = rho(M)^2; translations do not change height growth."""
    rho = spectral_radius(F.matrix, eps)
    return DynDegree(
        rho.value ** 2, 2 * rho.value * rho.error + rho.error ** 2,
        DegreeSource.SPECTRAL_RADIUS,
    )


def check_generators(curve, generators, ceiling=12):
    generators = tuple(generators)
    if not generators:
        raise InsufficientGenerators(
            "a non-torsion generator of {} is required".format(curve)
        )
    for G in generators:
        if not curve.contains(G):
            raise InvalidPoint("{} is not on {}".format(G, curve))
        if ell_order(curve, G, ceiling) is not None:
            raise InsufficientGenerators("{} is torsion".format(G))
    return generators


# [n]P = O with n <= 18 for every torsion point over a quadratic field
QUADRATIC_TORSION_EXPONENT = 18


def quadratic_witness(curve, search=64):
    """A point of infinite order with rational x, over Q or Q(sqrt(D)).

    Used when a curve has no rational generator to hand: x runs over
    small integers and y = sqrt(x^3 + a x + b) is taken in its own field.
    """
    for x in sorted(range(-search, search + 1), key=lambda v: (abs(v), v)):
        r = curve.rhs(Fraction(x))
        if r == 0:
            continue
        P = EllPoint(Fraction(x), sqrt_rat(r))
        if ell_order(curve, P, QUADRATIC_TORSION_EXPONENT) is None:
            logger.debug("witness of infinite order on {}: {}".format(curve, P))
            return P
    raise InsufficientGenerators(
        "no point of infinite order with |x| <= {} on {}".format(search, curve)
    )


def height_pairing(curve, generators, tol=1.0e-4):
    """Matrix of <G_a, G_b> = (hhat(G_a + G_b) - hhat(G_a) - hhat(G_b)) / 2."""
    k = len(generators)
    diag = [neron_tate(curve, G, tol).value for G in generators]
    H = np.diag(diag)
    for a in range(k):
        for b in range(a + 1, k):
            s = neron_tate(curve, ell_add(curve, generators[a], generators[b]), tol)
            H[a, b] = H[b, a] = (s.value - diag[a] - diag[b]) / 2
    return H


def coefficient_heights(C, pairing):
    """hhat of each coordinate sum_l C[j, l] G_l (torsion parts drop out)."""
    C = np.asarray(C, dtype=float)
    return np.einsum("jl,lm,jm->j", C, pairing, C)


def coefficient_trace(F, C, pairing, n):
    """Heights 1 + sum_j hhat(F^k(P)_j) for k = 0..n, P given by its
    integer coefficient matrix C over the generators.
    """
    M = sympy.Matrix(F.matrix)
    C = sympy.Matrix(C)
    trace = []
    for _ in range(n + 1):
        values = coefficient_heights(np.array(C.tolist(), dtype=float), pairing)
        trace.append(1.0 + float(values.sum()))
        C = M * C
    return trace


def cross_validate_degree(F, generators, iterations=20, tolerance=1.0e-2, pairing=None):
    """Compare rho(M)^2 with the last hhat growth ratio along a witness.

    The witness runs over the coordinate vectors e_i and the all-ones
    vector, each with the first generator; the largest final ratio wins.
    With no generators a quadratic_witness stands in. Raises
    InvariantViolation on a relative mismatch above ``tolerance``.
    """
    if generators:
        generators = check_generators(F.curve, generators)
    else:
        generators = (quadratic_witness(F.curve),)
        pairing = None
    if pairing is None:
        pairing = height_pairing(F.curve, generators[:1])
    delta = matrix_endo_dyn_degree(F).value
    g = F.g
    vectors = [[1 if i == j else 0 for i in range(g)] for j in range(g)]
    vectors.append([1] * g)
    best = 0.0
    for v in vectors:
        C = [[c] for c in v]
        trace = coefficient_trace(F, C, pairing[:1, :1], iterations)
        hhat = [t - 1.0 for t in trace]
        if hhat[-2] <= 0:
            continue
        best = max(best, hhat[-1] / hhat[-2])
    if abs(best - delta) > tolerance * delta:
        raise InvariantViolation(
            "height growth {:.6g} disagrees with rho(M)^2 = {:.6g}".format(
                best, delta
            )
        )
    logger.debug(
        "degree cross-check: rho^2 = {:.9g}, growth = {:.9g}".format(delta, best)
    )
    return best
