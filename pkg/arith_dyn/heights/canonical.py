from arith_dyn.arith import HeightValue
from arith_dyn.exceptions import BudgetExceeded
from arith_dyn.exceptions import Unsupported
from arith_dyn.heights.bounds import height_difference_bound
from arith_dyn.logger import logger
from arith_dyn.projective import PointIterator


DEFAULT_TOLERANCE = 1.0e-4
DEFAULT_MAX_ITERATIONS = 64
DEFAULT_MAX_BITS = 1 << 20


def canonical_height(
    f,
    point,
    tol=DEFAULT_TOLERANCE,
    max_iterations=DEFAULT_MAX_ITERATIONS,
    max_bits=DEFAULT_MAX_BITS,
    bound=None,
):
    """Call-Silverman canonical height lim h(f^n P) / r^n.

    With a two-sided TransformBound the result is rigorous and the error
    after n steps is r max(C+, C-) / (r^n (r - 1)) plus the float log
    error. Without one, iteration stops on successive differences below
    ``tol`` and the result is flagged non-rigorous. A repeated point
    proves the orbit finite and gives exactly 0.
    """
    if not f.is_single or not f.is_polarized:
        raise Unsupported(
            "canonical height needs a single-factor map of degree >= 2"
        )
    if tol <= 0:
        raise ValueError("tol must be positive")
    r = f.degree
    if bound is None:
        bound = height_difference_bound(f)
    rigorous = bound.two_sided

    walker = PointIterator(f, point)
    seen = {walker.key}
    prev_value = walker.height().value
    result = HeightValue(prev_value, bound.spread / (r - 1), rigorous)
    scale = 1
    for n in range(1, max_iterations + 1):
        if walker.bits() > max_bits:
            raise BudgetExceeded(
                "canonical height of {} exceeded {} bits after {} steps".format(
                    point, max_bits, n - 1
                ),
                partial=result,
            )
        walker.step()
        if walker.key in seen:
            logger.debug("orbit of {} closes after {} steps".format(point, n))
            return HeightValue(0.0)
        seen.add(walker.key)

        scale *= r
        h = walker.height()
        value = h.value / scale
        step = abs(value - prev_value)
        if rigorous:
            error = bound.spread * r / (scale * (r - 1)) + h.error / scale
        else:
            error = step
        result = HeightValue(value, error, rigorous).clamped()
        if step < tol and (not rigorous or error <= tol):
            logger.debug(
                "canonical height of {} settled after {} steps".format(point, n)
            )
            return result
        prev_value = value

    logger.warning(
        "canonical height of {} did not reach tol {} in {} steps".format(
            point, tol, max_iterations
        )
    )
    return result
