import collections
from dataclasses import dataclass
from dataclasses import field
import math
import time
from typing import List
from typing import Optional

from arith_dyn.exceptions import InvariantViolation
from arith_dyn.exceptions import Unsupported
from arith_dyn.heights import height_difference_bound
from arith_dyn.logger import logger
from arith_dyn.projective import point_height
from arith_dyn.search.enumerate import DEFAULT_MAX_CANDIDATES
from arith_dyn.search.enumerate import enumerate_points
from arith_dyn.search.orbit import is_preperiodic
from arith_dyn.workers import parallel_map


@dataclass
class Finding(object):
    point: object
    height: object
    certificate: object

    @property
    def record(self):
        return self.certificate.record


@dataclass
class SearchReport(object):
    """Preperiodic points of height <= B over fields of degree <= d.

    ``effective_bound`` is min(B, C-/(r-1)); every preperiodic point has
    height at most C-/(r-1), so the listing is complete whenever
    ``complete`` is set.
    """

    map_text: str
    d: int
    bound: float
    effective_bound: float
    preperiodic_bound: Optional[float]
    complete: bool
    found: List[Finding] = field(default_factory=list)
    candidates: int = 0
    unknown: int = 0
    elapsed: float = 0.0

    @property
    def points(self):
        return [item.point for item in self.found]

    @property
    def counts_per_field(self):
        counts = collections.Counter(
            "Q" if item.point.field is None else "Q(sqrt({}))".format(item.point.field)
            for item in self.found
        )
        return dict(sorted(counts.items()))

    @property
    def fields(self):
        return sorted(self.counts_per_field)


def _classify_job(args):
    f, point, max_steps, escape_margin, bound = args
    certificate = is_preperiodic(
        f, point, max_steps=max_steps, escape_margin=escape_margin, bound=bound
    )
    return point, certificate


def zf_d_search(
    f,
    d,
    B,
    max_steps=256,
    escape_margin=math.log(2),
    max_candidates=DEFAULT_MAX_CANDIDATES,
    workers=1,
):
    """Z_f(d) among points of height <= B for a polarized map.

    For polarized maps Z_f is exactly the set of preperiodic points, so
    this lists every preperiodic point of height <= B and degree <= d,
    each with an exact cycle certificate.
    """
    if not f.is_single or not f.is_polarized:
        raise Unsupported("zf_d_search needs a polarized single-factor map")
    bound = height_difference_bound(f)
    if not bound.two_sided:
        raise Unsupported(
            "zf_d_search needs a rigorous lower bound; {} has none".format(
                f.ambient
            )
        )
    start = time.time()
    c_pre = bound.preperiodic_bound(f.degree)
    effective = min(B, c_pre)
    candidates = sorted(
        enumerate_points(f.ambient, d, effective, max_candidates),
        key=lambda P: P.sort_key(),
    )
    report = SearchReport(
        map_text=str(f),
        d=d,
        bound=B,
        effective_bound=effective,
        preperiodic_bound=c_pre,
        complete=B >= c_pre,
        candidates=len(candidates),
    )
    logger.info(
        "zfd on {}: d = {}, B = {:.6g}, searching height <= {:.6g} "
        "({} candidates)".format(f, d, B, effective, len(candidates))
    )

    jobs = [(f, P, max_steps, escape_margin, bound) for P in candidates]
    for point, certificate in parallel_map(_classify_job, jobs, workers):
        if certificate.verdict is None:
            report.unknown += 1
            logger.warning("{} left Unknown after {} steps".format(point, max_steps))
            continue
        if not certificate.verdict:
            continue
        if not certificate.record.check():
            raise InvariantViolation("cycle re-check failed at {}".format(point))
        report.found.append(Finding(point, point_height(point), certificate))

    report.elapsed = time.time() - start
    logger.info(
        "zfd on {}: {} preperiodic points in {:.2f}s".format(
            f, len(report.found), report.elapsed
        )
    )
    return report
