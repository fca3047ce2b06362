import collections
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
import math
from typing import Dict
from typing import List
from typing import Tuple

import sympy

from arith_dyn.elliptic.curve import EllipticCurve
from arith_dyn.elliptic.curve import EllPoint
from arith_dyn.elliptic.curve import O
from arith_dyn.elliptic.curve import ell_order
from arith_dyn.exceptions import InvariantViolation
from arith_dyn.exceptions import SingularCurve
from arith_dyn.logger import logger
from arith_dyn.workers import parallel_map


def _integer_roots(coeffs):
    x = sympy.Symbol("x")
    poly = sympy.Poly(coeffs, x, domain="ZZ")
    return sorted(int(r) for r in poly.ground_roots())


def torsion_candidates(curve):
    """Lutz-Nagell candidates: integral points with y = 0 or y^2 | 4a^3 + 27b^2."""
    a, b = curve.a, curve.b
    D = abs(4 * a ** 3 + 27 * b ** 2)
    candidates = [EllPoint(Fraction(x), Fraction(0)) for x in _integer_roots([1, 0, a, b])]
    for d in sympy.divisors(D):
        y = math.isqrt(d)
        if y * y != d:
            continue
        for x in _integer_roots([1, 0, a, b - d]):
            candidates.append(EllPoint(Fraction(x), Fraction(y)))
            candidates.append(EllPoint(Fraction(x), Fraction(-y)))
    return candidates


def torsion_subgroup(curve, ceiling=12):
    """E(Q)_tors, each point certified by [n]P = O for some n <= ceiling.

    Returned sorted, starting with O.
    """
    points = [O]
    for P in torsion_candidates(curve):
        n = ell_order(curve, P, ceiling)
        if n is None:
            logger.debug("{} on {} is not torsion".format(P, curve))
            continue
        points.append(P)
    points.sort(key=lambda P: P.sort_key())
    return points


@dataclass(frozen=True)
class TorsionStructure(object):
    """E(Q)_tors = Z/n1 x Z/n2 with n1 | n2 (n1 omitted when 1)."""

    invariants: Tuple[int, ...]
    exponent: int
    order: int

    @property
    def annihilator_ok(self):
        # |Tor| <= m^(2g) for a group killed by m, g = 1
        return self.order <= self.exponent ** 2

    def __str__(self):
        if self.order == 1:
            return "0"
        return " x ".join("Z/{}".format(n) for n in self.invariants)


def torsion_structure(curve, ceiling=12, points=None):
    if points is None:
        points = torsion_subgroup(curve, ceiling)
    orders = [ell_order(curve, P, ceiling) for P in points]
    exponent = 1
    for n in orders:
        exponent = exponent * n // math.gcd(exponent, n)
    order = len(points)
    if order % exponent:
        raise InvariantViolation(
            "exponent {} does not divide |Tor| = {} on {}".format(
                exponent, order, curve
            )
        )
    if exponent == order:
        invariants = (order,)
    else:
        invariants = (order // exponent, exponent)
    return TorsionStructure(invariants, exponent, order)


@dataclass
class TorsionCountReport(object):
    counts: Dict[Tuple[int, int], int] = field(default_factory=dict)
    structures: Dict[Tuple[int, int], TorsionStructure] = field(default_factory=dict)
    points: Dict[Tuple[int, int], List[EllPoint]] = field(default_factory=dict)
    skipped: List[Tuple[Tuple[int, int], str]] = field(default_factory=list)

    @property
    def maximum(self):
        return max(self.counts.values()) if self.counts else 0

    @property
    def argmax(self):
        top = self.maximum
        return [key for key in sorted(self.counts) if self.counts[key] == top]

    @property
    def histogram(self):
        return dict(sorted(collections.Counter(self.counts.values()).items()))


def _torsion_job(args):
    (a, b), ceiling = args
    try:
        curve = EllipticCurve(a, b)
    except SingularCurve as e:
        return (a, b), None, None, str(e)
    points = torsion_subgroup(curve, ceiling)
    return (a, b), points, torsion_structure(curve, ceiling, points), None


def torsion_count_ubc(family, ceiling=16, workers=1):
    """|E(Q)_tors| over a list of (a, b); singular entries are skipped."""
    report = TorsionCountReport()
    jobs = [((int(a), int(b)), ceiling) for a, b in family]
    for key, points, structure, problem in parallel_map(_torsion_job, jobs, workers):
        if structure is None:
            logger.warning("skipping {}: {}".format(key, problem))
            report.skipped.append((key, problem))
            continue
        if structure.order > ceiling or not structure.annihilator_ok:
            raise InvariantViolation(
                "torsion order {} on {} breaks the bound {}".format(
                    structure.order, key, ceiling
                )
            )
        report.counts[key] = structure.order
        report.structures[key] = structure
        report.points[key] = points
    logger.info(
        "torsion sweep: {} curves, max order {}, {} skipped".format(
            len(report.counts), report.maximum, len(report.skipped)
        )
    )
    return report
