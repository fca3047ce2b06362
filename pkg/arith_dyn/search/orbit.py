from dataclasses import dataclass
import enum
import math
from typing import Optional
from typing import Tuple

from arith_dyn.arith import HeightValue
from arith_dyn.arith import log_error
from arith_dyn.exceptions import InvariantViolation
from arith_dyn.exceptions import Unsupported
from arith_dyn.heights import height_difference_bound
from arith_dyn.heights.canonical import DEFAULT_MAX_BITS
from arith_dyn.logger import logger
from arith_dyn.projective import PointIterator
from arith_dyn.projective import ProjPoint


class OrbitStatus(enum.Enum):
    CYCLE = "Cycle"
    ESCAPED = "Escaped"
    BUDGET = "Budget"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class OrbitRecord(object):
    """Visited points of one forward orbit.

    For a Cycle, points[tail_length + cycle_length] == points[tail_length]
    and nothing past that index is stored.
    """

    start: ProjPoint
    tail_length: int
    cycle_length: Optional[int]
    points: Tuple[ProjPoint, ...]
    height_trace: Tuple[HeightValue, ...]
    status: OrbitStatus

    @property
    def is_cycle(self):
        return self.status is OrbitStatus.CYCLE

    def check(self):
        """Re-verify the cycle condition exactly."""
        if not self.is_cycle:
            return False
        return self.points[self.tail_length + self.cycle_length] == self.points[
            self.tail_length
        ]


def orbit(f, point, max_steps=256, height_cutoff=math.inf, max_bits=None):
    """Forward orbit until a point repeats, a height exceeds the cutoff,
    or the step (or bit) budget runs out.
    """
    walker = PointIterator(f, point)
    index = {walker.key: 0}
    points = [point]
    heights = [walker.height()]
    status = OrbitStatus.BUDGET
    tail, cycle = len(points) - 1, None
    for _ in range(max_steps):
        if heights[-1].lower > height_cutoff:
            status = OrbitStatus.ESCAPED
            break
        if max_bits is not None and walker.bits() > max_bits:
            break
        walker.step()
        points.append(walker.point())
        heights.append(walker.height())
        if walker.key in index:
            tail = index[walker.key]
            cycle = len(points) - 1 - tail
            status = OrbitStatus.CYCLE
            break
        index[walker.key] = len(points) - 1
    else:
        if heights[-1].lower > height_cutoff:
            status = OrbitStatus.ESCAPED
    if status is not OrbitStatus.CYCLE:
        tail = len(points) - 1
    logger.debug(
        "orbit of {}: {} after {} points".format(point, status, len(points))
    )
    return OrbitRecord(
        start=point,
        tail_length=tail,
        cycle_length=cycle,
        points=tuple(points),
        height_trace=tuple(heights),
        status=status,
    )


@dataclass(frozen=True)
class PreperiodicCertificate(object):
    """``verdict`` is True (exact cycle), False (rigorous hhat > 0) or
    None (Unknown: no rigorous bound and the budget ran out).
    """

    verdict: Optional[bool]
    record: OrbitRecord
    hhat_lower: float = 0.0
    rigorous: bool = True

    @property
    def label(self):
        return {True: "Preperiodic", False: "Wandering", None: "Unknown"}[
            self.verdict
        ]


def escape_threshold(f, bound, escape_margin=math.log(2)):
    """Heights above this force hhat > 0; None without a lower bound."""
    c_pre = bound.preperiodic_bound(f.degree)
    if c_pre is None:
        return None
    return c_pre + escape_margin


def is_preperiodic(
    f,
    point,
    max_steps=256,
    escape_margin=math.log(2),
    bound=None,
    max_bits=DEFAULT_MAX_BITS,
):
    """Certified preperiodicity for a polarized single-factor map.

    A visited point Q = f^k(P) with h(Q) > C-/(r-1) has
    hhat(Q) >= h(Q) - C-/(r-1) > 0 and hhat(P) = hhat(Q)/r^k.
    """
    if not f.is_single or not f.is_polarized:
        raise Unsupported("is_preperiodic needs a polarized single-factor map")
    if bound is None:
        bound = height_difference_bound(f)
    threshold = escape_threshold(f, bound, escape_margin)
    cutoff = math.inf if threshold is None else threshold
    record = orbit(f, point, max_steps, cutoff, max_bits)

    if record.status is OrbitStatus.CYCLE:
        if not record.check():
            raise InvariantViolation("cycle of {} does not close".format(point))
        return PreperiodicCertificate(True, record)
    if record.status is OrbitStatus.ESCAPED:
        k = len(record.points) - 1
        excess = record.height_trace[-1].lower - threshold + escape_margin
        lower = (excess - log_error(excess)) / f.degree ** k
        return PreperiodicCertificate(False, record, hhat_lower=lower)
    return PreperiodicCertificate(None, record, rigorous=threshold is not None)


def verify_orbit_row(f, point, tail_length, cycle_length):
    """Exact re-check of a reported (tail, cycle) pair."""
    record = orbit(f, point, max_steps=tail_length + cycle_length + 1)
    return (
        record.is_cycle
        and record.tail_length == tail_length
        and record.cycle_length == cycle_length
        and record.check()
    )
