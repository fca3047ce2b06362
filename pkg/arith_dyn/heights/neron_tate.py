from arith_dyn.arith import HeightValue
from arith_dyn.elliptic import lattes_map
from arith_dyn.elliptic import x_projection
from arith_dyn.exceptions import BudgetExceeded
from arith_dyn.heights.canonical import DEFAULT_MAX_ITERATIONS
from arith_dyn.heights.canonical import canonical_height
from arith_dyn.logger import logger


DEFAULT_NT_MAX_BITS = 1 << 18


def neron_tate(curve, point, tol=1.0e-4, max_bits=DEFAULT_NT_MAX_BITS):
    """Neron-Tate height (1/2) lim h(x([2^n]P)) / 4^n.

    Computed as half the canonical height of the Lattes map at x(P), so
    the error bound is the rigorous P^1 one. If the bit budget runs out
    the partial enclosure is returned instead of raising.
    """
    if point.is_zero:
        return HeightValue(0.0)
    L = lattes_map(curve)
    try:
        h = canonical_height(
            L,
            x_projection(point),
            tol=2 * tol,
            max_iterations=DEFAULT_MAX_ITERATIONS,
            max_bits=max_bits,
        )
    except BudgetExceeded as e:
        logger.debug("neron_tate({}) hit the bit budget: {}".format(point, e))
        h = e.partial
    return h.scaled(0.5)
