from dataclasses import dataclass
import math
from typing import Optional

from arith_dyn.arith import log_error
from arith_dyn.exceptions import NotAMorphism
from arith_dyn.exceptions import Unsupported
from arith_dyn.logger import logger
from arith_dyn.projective import cofactor_bound


@dataclass(frozen=True)
class TransformBound(object):
    """r h(P) - lower <= h(f(P)) <= r h(P) + upper for every P."""

    upper: float
    lower: Optional[float] = None
    rigorous: bool = False

    @property
    def two_sided(self):
        return self.rigorous and self.lower is not None

    @property
    def spread(self):
        """max(C+, C-), the constant in the telescoping tail."""
        if self.lower is None:
            return self.upper
        return max(self.upper, self.lower)

    def preperiodic_bound(self, r):
        """Every preperiodic point has h <= C- / (r - 1)."""
        if not self.two_sided:
            return None
        return self.lower / (r - 1)


def _log_rational(q):
    return math.log(int(q.p)) - math.log(int(q.q))


def height_difference_bound(f):
    if not f.is_single:
        raise Unsupported(
            "height_difference_bound needs a single-factor map, got {}".format(
                f.ambient
            )
        )
    mass = f.monomial_count * f.coefficient_norm
    if mass == 1:
        upper = 0.0
    else:
        upper = math.log(mass)
        upper += log_error(upper)

    if f.ambient.factors[0] != 1:
        return TransformBound(upper, None, rigorous=False)

    R, gamma = cofactor_bound(f)
    if R == 0:
        raise NotAMorphism("resultant of {} vanishes".format(f))
    if gamma == 1:
        lower = 0.0
    else:
        lower = _log_rational(gamma)
        lower += log_error(lower)
    logger.debug(
        "bound for {}: Res = {}, C+ = {:.6g}, C- = {:.6g}".format(
            f, R, upper, lower
        )
    )
    return TransformBound(upper, lower, rigorous=True)
