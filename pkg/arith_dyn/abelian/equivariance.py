from dataclasses import dataclass
from typing import List

from arith_dyn.elliptic import ell_add
from arith_dyn.elliptic import ell_order
from arith_dyn.elliptic import lattes_map
from arith_dyn.elliptic import x_projection
from arith_dyn.logger import logger
from arith_dyn.projective import evaluate
from arith_dyn.search import is_preperiodic


@dataclass
class EquivarianceRow(object):
    point: object
    commutes: bool
    torsion: bool
    preperiodic: object

    @property
    def ok(self):
        return self.commutes and self.preperiodic is self.torsion


@dataclass
class EquivarianceReport(object):
    rows: List[EquivarianceRow]

    @property
    def ok(self):
        return all(row.ok for row in self.rows)


def equivariance_check(curve, points, ceiling=12, max_steps=256):
    """x o [2] = L o x on every sample, and P torsion iff x(P) is
    L-preperiodic (the finite-map case of the equivariance law).
    """
    L = lattes_map(curve)
    rows = []
    for P in points:
        doubled = x_projection(ell_add(curve, P, P))
        commutes = evaluate(L, x_projection(P)) == doubled
        torsion = P.is_zero or ell_order(curve, P, ceiling) is not None
        certificate = is_preperiodic(L, x_projection(P), max_steps=max_steps)
        row = EquivarianceRow(P, commutes, torsion, certificate.verdict)
        if not row.ok:
            logger.warning("equivariance fails at {}".format(P))
        rows.append(row)
    return EquivarianceReport(rows)
