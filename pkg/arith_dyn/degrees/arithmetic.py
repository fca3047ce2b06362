from dataclasses import dataclass
import enum
import math
from typing import Optional
from typing import Tuple

import numpy as np

from arith_dyn.degrees.dynamical import dyn_degree
from arith_dyn.heights.canonical import DEFAULT_MAX_BITS
from arith_dyn.logger import logger
from arith_dyn.projective import PointIterator
from arith_dyn.search import is_preperiodic


class Classification(enum.Enum):
    PREPERIODIC = "Preperiodic"
    MAX_DEGREE = "MaxDegree"
    UNKNOWN = "Unknown"

    def __str__(self):
        return self.value


class Verdict(enum.Enum):
    EXACT_ONE = "ExactOne_Preperiodic"
    EQUALS_DELTA = "EqualsDelta_Certified"
    FACTOR_MAX = "FactorMax_Certified"
    ESTIMATE = "Estimate"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ArithDegreeEstimate(object):
    point: object
    ratio_trace: Tuple[float, ...]
    root_trace: Tuple[float, ...]
    estimate: float
    verdict: Verdict
    raw_estimate: Optional[float] = None
    exact_steps: int = 0
    delta: float = 1.0


@dataclass(frozen=True)
class ProductClassification(object):
    """alpha = max over factors of (1 if preperiodic else r_i)."""

    factors: Tuple[Classification, ...]
    alpha: Optional[float]
    delta: float

    @property
    def in_zf(self):
        """alpha < delta, or None when a factor is Unknown."""
        if self.alpha is None:
            return None
        return self.alpha < self.delta


def classify_point_polarized(f, point, max_steps=256, escape_margin=math.log(2)):
    certificate = is_preperiodic(
        f, point, max_steps=max_steps, escape_margin=escape_margin
    )
    if certificate.verdict is True:
        return Classification.PREPERIODIC
    if certificate.verdict is False:
        return Classification.MAX_DEGREE
    return Classification.UNKNOWN


def classify_product_point(f, point, max_steps=256, escape_margin=math.log(2)):
    """Factorwise classification of a point of a block product map."""
    labels = []
    alphas = []
    for i in range(len(f.ambient)):
        g = f.factor(i)
        if not g.is_polarized:
            labels.append(Classification.UNKNOWN)
            continue
        label = classify_point_polarized(
            g, point.factor(i), max_steps=max_steps, escape_margin=escape_margin
        )
        labels.append(label)
        if label is Classification.PREPERIODIC:
            alphas.append(1.0)
        elif label is Classification.MAX_DEGREE:
            alphas.append(float(g.degree))
    delta = float(max(f.degrees))
    alpha = max(alphas) if len(alphas) == len(labels) else None
    return ProductClassification(tuple(labels), alpha, delta)


def _combine(values, combine):
    if combine == "sum":
        return sum(values)
    if combine == "max":
        return max(values)
    raise ValueError("combine must be 'sum' or 'max'")


class _FactorTrace(object):
    """Height history of one factor, used to continue the trace once
    exact iteration stops: a cycled factor repeats its heights, any
    other factor grows by its degree.
    """

    def __init__(self, degree):
        self.degree = degree
        self.keys = {}
        self.heights = []
        self.cycle = None

    def record(self, key, height):
        n = len(self.heights)
        if self.cycle is None and key in self.keys:
            start = self.keys[key]
            self.cycle = (start, n - start)
        self.keys.setdefault(key, n)
        self.heights.append(height)

    def extrapolate(self):
        n = len(self.heights)
        if self.cycle is not None:
            start, period = self.cycle
            h = self.heights[start + (n - start) % period]
        else:
            h = self.degree * self.heights[-1]
        self.heights.append(h)
        return h


def height_trace(f, point, n_max, combine="sum", max_bits=DEFAULT_MAX_BITS):
    """h_H(f^n P) = 1 + h(f^n P) for n = 0..n_max.

    Returns (trace, exact_steps, cycled); ``cycled`` means the point's
    own orbit repeated, in which case the trace stops there.
    """
    walker = PointIterator(f, point)
    factors = [_FactorTrace(r) for r in f.degrees]
    seen = {walker.key}
    for tr, key, h in zip(factors, walker.block_keys(), walker.factor_heights()):
        tr.record(key, h.value)
    trace = [1.0 + _combine([tr.heights[-1] for tr in factors], combine)]
    exact = 0
    for n in range(1, n_max + 1):
        if exact == n - 1 and walker.bits() <= max_bits:
            walker.step()
            exact = n
            if walker.key in seen:
                return trace, exact, True
            seen.add(walker.key)
            for tr, key, h in zip(
                factors, walker.block_keys(), walker.factor_heights()
            ):
                tr.record(key, h.value)
            values = [tr.heights[-1] for tr in factors]
        else:
            values = [tr.extrapolate() for tr in factors]
        trace.append(1.0 + _combine(values, combine))
    if exact < n_max:
        logger.debug(
            "height trace of {}: {} exact steps, {} extrapolated".format(
                point, exact, n_max - exact
            )
        )
    return trace, exact, False


def arith_degree_estimate(
    f,
    point,
    n_max=20,
    combine="sum",
    max_bits=DEFAULT_MAX_BITS,
    max_steps=256,
    escape_margin=math.log(2),
    certify=True,
):
    """Arithmetic degree alpha_f(P) = lim h_H(f^n P)^(1/n).

    Exact cycles give 1. Polarized maps (and products of them) are
    certified through preperiodicity, which decides alpha exactly.
    Everything else gets the geometric mean of the last ceil(n_max/2)
    height ratios, clipped to [1, delta].
    """
    if n_max < 4:
        raise ValueError("n_max must be >= 4")
    delta = dyn_degree(f).value
    trace, exact, cycled = height_trace(f, point, n_max, combine, max_bits)
    ratios = tuple(b / a for a, b in zip(trace, trace[1:]))
    roots = tuple(trace[n] ** (1.0 / n) for n in range(1, len(trace)))

    raw = None
    if ratios:
        window = np.array(ratios[-int(math.ceil(n_max / 2.0)):])
        raw = float(np.exp(np.mean(np.log(window))))

    def result(estimate, verdict):
        return ArithDegreeEstimate(
            point=point,
            ratio_trace=ratios,
            root_trace=roots,
            estimate=estimate,
            verdict=verdict,
            raw_estimate=raw,
            exact_steps=exact,
            delta=delta,
        )

    if cycled:
        return result(1.0, Verdict.EXACT_ONE)

    if certify and f.is_single and f.is_polarized:
        label = classify_point_polarized(f, point, max_steps, escape_margin)
        if label is Classification.PREPERIODIC:
            return result(1.0, Verdict.EXACT_ONE)
        if label is Classification.MAX_DEGREE:
            return result(delta, Verdict.EQUALS_DELTA)
    elif certify and not f.is_single:
        product = classify_product_point(f, point, max_steps, escape_margin)
        if product.alpha is not None:
            if product.alpha == 1.0:
                return result(1.0, Verdict.EXACT_ONE)
            if product.alpha == product.delta:
                return result(product.alpha, Verdict.EQUALS_DELTA)
            return result(product.alpha, Verdict.FACTOR_MAX)

    if raw is None:
        return result(1.0, Verdict.ESTIMATE)
    return result(min(max(raw, 1.0), delta), Verdict.ESTIMATE)
