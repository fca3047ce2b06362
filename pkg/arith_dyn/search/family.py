import collections
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
import math
from typing import Dict
from typing import List
from typing import Tuple

from arith_dyn.exceptions import ArithDynError
from arith_dyn.logger import logger
from arith_dyn.projective import from_affine
from arith_dyn.projective import morphism_check
from arith_dyn.search.enumerate import DEFAULT_MAX_CANDIDATES
from arith_dyn.search.zfd import zf_d_search
from arith_dyn.workers import parallel_map


@dataclass
class FamilyReport(object):
    """|Z_{f_s}(d) with h <= B| for each parameter s of a family."""

    family: str
    parameter: str
    d: int
    bound: float
    counts: Dict[Fraction, int] = field(default_factory=dict)
    reports: Dict[Fraction, object] = field(default_factory=dict)
    skipped: List[Tuple[Fraction, str]] = field(default_factory=list)

    @property
    def maximum(self):
        return max(self.counts.values()) if self.counts else 0

    @property
    def argmax(self):
        top = self.maximum
        return [s for s in sorted(self.counts) if self.counts[s] == top]

    @property
    def histogram(self):
        return dict(sorted(collections.Counter(self.counts.values()).items()))


def parameter_grid(bound):
    """All p/q with |p|, |q| <= bound, q > 0, each value once."""
    values = {
        Fraction(p, q)
        for q in range(1, bound + 1)
        for p in range(-bound, bound + 1)
    }
    return sorted(values)


def _family_job(args):
    text, name, value, d, B, max_steps, escape_margin, max_candidates = args
    try:
        f = from_affine(text, {name: value})
    except (ArithDynError, ValueError) as e:
        return value, None, "degenerate specialization: {}".format(e)
    if not morphism_check(f):
        return value, None, "not a morphism (resultant 0): {}".format(f)
    if not f.is_polarized:
        return value, None, "degree {} is not polarized".format(f.degree)
    report = zf_d_search(
        f,
        d,
        B,
        max_steps=max_steps,
        escape_margin=escape_margin,
        max_candidates=max_candidates,
    )
    return value, report, None


def family_ubc_experiment(
    text,
    params,
    d,
    B,
    parameter="c",
    max_steps=256,
    escape_margin=math.log(2),
    max_candidates=DEFAULT_MAX_CANDIDATES,
    workers=1,
):
    """Run zf_d_search on every specialization f_s of an affine family.

    Specializations that are constant or fail morphism_check are
    recorded in ``skipped`` with the reason and left out of the counts.
    """
    params = sorted({Fraction(s) for s in params})
    result = FamilyReport(text, parameter, d, B)
    jobs = [
        (text, parameter, s, d, B, max_steps, escape_margin, max_candidates)
        for s in params
    ]
    for value, report, problem in parallel_map(_family_job, jobs, workers):
        if report is None:
            logger.warning("{} = {}: skipped, {}".format(parameter, value, problem))
            result.skipped.append((value, problem))
            continue
        result.counts[value] = len(report.found)
        result.reports[value] = report
    logger.info(
        "family {}: {} fibers, max count {} at {} = {}".format(
            text,
            len(result.counts),
            result.maximum,
            parameter,
            ", ".join(str(s) for s in result.argmax),
        )
    )
    return result
