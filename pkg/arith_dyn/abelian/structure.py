from dataclasses import dataclass
from dataclasses import field
import itertools
import math
from typing import List
from typing import Optional
from typing import Tuple

import numpy as np
import sympy

from arith_dyn.abelian.matrix_endo import check_generators
from arith_dyn.abelian.matrix_endo import coefficient_trace
from arith_dyn.abelian.matrix_endo import cross_validate_degree
from arith_dyn.abelian.matrix_endo import height_pairing
from arith_dyn.abelian.matrix_endo import matrix_endo_dyn_degree
from arith_dyn.degrees import max_root_modulus
from arith_dyn.degrees import spectral_radius
from arith_dyn.elliptic import ell_add
from arith_dyn.elliptic import ell_mul
from arith_dyn.elliptic import ell_order
from arith_dyn.elliptic import torsion_subgroup
from arith_dyn.elliptic import x_projection
from arith_dyn.exceptions import Unsupported
from arith_dyn.logger import logger
from arith_dyn.projective import point_height


@dataclass(frozen=True)
class InvariantLocus(object):
    """Hypothesized Z_F = B + p + Tor in generator-coefficient space.

    ``kernel`` spans B (columns, rational), ``shift`` is the coefficient
    matrix of p, ``q_matrix`` is Q(M) with B = ker Q(M).
    """

    q_matrix: sympy.Matrix
    kernel: sympy.Matrix
    shift: Optional[sympy.Matrix]
    matrix: Optional[sympy.Matrix] = None

    @property
    def dimension(self):
        return self.kernel.cols

    def _in_span(self, V):
        if self.kernel.cols == 0:
            return V.is_zero_matrix
        return self.kernel.row_join(V).rank() == self.kernel.rank()

    def is_invariant(self):
        """F(B + p) = B + p: M B in B and (I - M) p in B."""
        if self.shift is None or self.matrix is None:
            return False
        M = self.matrix
        if self.kernel.cols and not self._in_span(M * self.kernel):
            return False
        return self._in_span((sympy.eye(M.rows) - M) * self.shift)

    def contains(self, C):
        """P = C G + t lies in B + p + Tor."""
        if self.shift is None:
            return False
        if self.shift.cols == 0:
            # no generators: every probe is a torsion tuple
            return True
        diff = sympy.Matrix(C) - self.shift
        return (self.q_matrix * diff).is_zero_matrix


def _max_modulus(factor, t):
    coeffs = sympy.Poly(factor, t).all_coeffs()
    if len(coeffs) == 2:
        value = abs(float(sympy.Rational(coeffs[1], coeffs[0])))
        return value, value
    rho = max_root_modulus(sympy.Poly(factor, t))
    return rho.lower, rho.upper


def invariant_locus(F, generator_count=1):
    """B = ker Q(M) where Q collects the irreducible factors of the
    characteristic polynomial whose roots all have modulus < rho(M);
    p solves (I - M) p = a modulo B, in coefficient space.
    """
    t = sympy.Symbol("t")
    M = F.sympy_matrix
    g = F.g
    rho = spectral_radius(F.matrix)
    _, factors = sympy.factor_list(M.charpoly(t).as_expr(), t)
    Q = sympy.eye(g)
    for factor, multiplicity in factors:
        lower, upper = _max_modulus(factor, t)
        if upper < rho.lower:
            Q = Q * _poly_at(factor, t, M) ** multiplicity
    kernel_vectors = Q.nullspace()
    if kernel_vectors:
        K = sympy.Matrix.hstack(*kernel_vectors)
    else:
        K = sympy.zeros(g, 0)

    # translations by torsion have zero generator coefficients
    torsion_only = all(
        a.is_zero or ell_order(F.curve, a) is not None for a in F.translation
    )
    if not torsion_only:
        raise Unsupported("only torsion translations are tracked in coefficient space")
    if generator_count == 0:
        return InvariantLocus(Q, K, sympy.zeros(g, 0), M)
    A = sympy.zeros(g, generator_count)
    shift = _solve_shift(M, K, A)
    return InvariantLocus(Q, K, shift, M)


def _poly_at(expr, t, M):
    coeffs = sympy.Poly(expr, t).all_coeffs()
    result = sympy.zeros(*M.shape)
    for c in coeffs:
        result = result * M + c * sympy.eye(M.rows)
    return result


def _solve_shift(M, K, A):
    """C_p with (I - M) C_p - K V = A, or None when unsolvable."""
    g = M.rows
    system = (sympy.eye(g) - M).row_join(-K) if K.cols else sympy.eye(g) - M
    try:
        solution, params = system.gauss_jordan_solve(A)
    except ValueError:
        return None
    solution = solution.subs({p: 0 for p in params})
    return solution[:g, :]


@dataclass
class ProbeResult(object):
    points: Tuple
    coefficients: Tuple[Tuple[int, ...], ...]
    alpha: float
    predicted: bool
    low: bool

    @property
    def ok(self):
        return self.predicted == self.low


@dataclass
class StructureReport(object):
    delta: float
    growth: float
    locus: InvariantLocus
    torsion: List = field(default_factory=list)
    probes: List[ProbeResult] = field(default_factory=list)

    @property
    def violations(self):
        return [p for p in self.probes if not p.ok]

    @property
    def low_points(self):
        return [p for p in self.probes if p.low]


def _alpha_from_trace(trace, n_max):
    ratios = np.array([b / a for a, b in zip(trace, trace[1:])])
    window = ratios[-int(math.ceil(n_max / 2.0)):]
    return float(np.exp(np.mean(np.log(window))))


def _materialize(curve, C, torsion_tuple, generators):
    points = []
    for row, t in zip(C, torsion_tuple):
        P = t
        for c, G in zip(row, generators):
            if c:
                P = ell_add(curve, P, ell_mul(curve, c, G))
        points.append(P)
    return tuple(points)


def _probe_height(points):
    return sum(point_height(x_projection(P)).value for P in points)


def zf_structure_check(
    F,
    generators,
    d=1,
    B=None,
    n_max=20,
    probe_radius=2,
    alpha_tolerance=0.5,
    torsion_ceiling=12,
    cross_validation_tolerance=1.0e-2,
    cross_validation_iterations=20,
    torsion_shift=None,
):
    """Check Z_F = B + p + Tor on probe tuples of E^g.

    Probes are sum_l C[j, l] G_l + t_j with |C| <= probe_radius and t
    rational torsion. Without generators (a rank-0 curve) only torsion
    tuples are probed and the degree cross-check uses a quadratic_witness. A probe is low when its alpha estimate is below
    delta - alpha_tolerance; every low probe must lie in the hypothesized
    locus and every other probe outside it.
    """
    if d != 1:
        raise Unsupported("zf_structure_check only runs over Q (d = 1)")
    if F.g > 2:
        raise Unsupported("zf_structure_check supports g <= 2")
    curve = F.curve
    generators = tuple(generators)
    if generators:
        generators = check_generators(curve, generators, torsion_ceiling)
    delta = matrix_endo_dyn_degree(F).value
    if delta <= 1:
        raise Unsupported("zf_structure_check needs delta > 1")
    pairing = height_pairing(curve, generators) if generators else None
    growth = cross_validate_degree(
        F,
        generators,
        iterations=cross_validation_iterations,
        tolerance=cross_validation_tolerance,
        pairing=pairing,
    )
    locus = invariant_locus(F, len(generators))
    torsion = torsion_subgroup(curve, torsion_ceiling)
    report = StructureReport(delta, growth, locus, torsion)

    k = len(generators)
    span = range(-probe_radius, probe_radius + 1)
    for flat in itertools.product(span, repeat=F.g * k):
        C = tuple(tuple(flat[j * k:(j + 1) * k]) for j in range(F.g))
        if k:
            trace = coefficient_trace(F, C, pairing, n_max)
            alpha = min(_alpha_from_trace(trace, n_max), delta)
        else:
            alpha = 1.0
        low = alpha < delta - alpha_tolerance
        predicted = locus.contains(C)
        for torsion_tuple in itertools.product(torsion, repeat=F.g):
            if torsion_shift is not None:
                torsion_tuple = tuple(
                    ell_add(curve, t, s) for t, s in zip(torsion_tuple, torsion_shift)
                )
            points = _materialize(curve, C, torsion_tuple, generators)
            if B is not None and _probe_height(points) > B:
                continue
            report.probes.append(ProbeResult(points, C, alpha, predicted, low))

    logger.info(
        "structure check: delta = {:.6g}, {} probes, {} low, {} violations".format(
            delta, len(report.probes), len(report.low_points), len(report.violations)
        )
    )
    return report
