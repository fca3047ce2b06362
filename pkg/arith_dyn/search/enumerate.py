from fractions import Fraction
import itertools
import math

from arith_dyn.arith import abs_height_alg
from arith_dyn.arith import quad_reduce
from arith_dyn.exceptions import BudgetExceeded
from arith_dyn.exceptions import Unsupported
from arith_dyn.projective import Ambient
from arith_dyn.projective import integral_height
from arith_dyn.projective import point_canonicalize

HEIGHT_SLACK = 1.0e-12

DEFAULT_MAX_CANDIDATES = 5000000


def _box_size(B):
    """Largest integer T with log T <= B (up to the slack)."""
    return int(math.floor(math.exp(B + HEIGHT_SLACK)))


def integral_points(n, B):
    """Primitive integer tuples in P^n with max |coordinate| <= e^B,
    leftmost nonzero entry positive."""
    T = _box_size(B)
    span = range(-T, T + 1)
    for coords in itertools.product(span, repeat=n + 1):
        lead = next((c for c in coords if c), 0)
        if lead <= 0:
            continue
        if math.gcd(*coords) != 1:
            continue
        yield coords


def _count_box(ambient, B):
    T = _box_size(B)
    return sum((2 * T + 1) ** (n + 1) for n in ambient.factors)


def _rational_points(ambient, B):
    per_factor = []
    for n in ambient.factors:
        block = [
            (integral_height(c).value, c) for c in integral_points(n, B)
        ]
        per_factor.append(block)
    for combo in itertools.product(*per_factor):
        if sum(h for h, _ in combo) > B + HEIGHT_SLACK:
            continue
        yield point_canonicalize(
            [[Fraction(v) for v in c] for _, c in combo], ambient
        )


def quadratic_points(B, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Both roots of every primitive irreducible a x^2 + b x + c (a > 0)
    whose roots have height <= B, as points (alpha : 1).

    h(alpha) = log(M)/2 for the Mahler measure M >= max(a, |c|, |b|/2),
    so the coefficient box is a <= T, |b| <= 2T, |c| <= T with T = e^(2B).
    """
    T = int(math.floor(math.exp(2 * B + HEIGHT_SLACK)))
    box = T * (4 * T + 1) * (2 * T + 1)
    if box > max_candidates:
        raise BudgetExceeded(
            "quadratic box for B = {:.6g} has {} candidates (> {})".format(
                B, box, max_candidates
            )
        )
    return _quadratic_points(T, B)


def _quadratic_points(T, B):
    for a in range(1, T + 1):
        for c in range(-T, T + 1):
            if c == 0:
                continue
            for b in range(-2 * T, 2 * T + 1):
                if math.gcd(a, b, c) != 1:
                    continue
                disc = b * b - 4 * a * c
                if disc >= 0 and math.isqrt(disc) ** 2 == disc:
                    continue
                root = quad_reduce(Fraction(-b, 2 * a), Fraction(1, 2 * a), disc)
                if abs_height_alg(root).value > B + HEIGHT_SLACK:
                    continue
                for alpha in (root, root.conjugate()):
                    yield point_canonicalize([[alpha, Fraction(1)]])


def enumerate_points(ambient, d, B, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Points of height <= B and field degree <= d, each exactly once."""
    if isinstance(ambient, str):
        ambient = Ambient.parse(ambient)
    if d not in (1, 2):
        raise Unsupported("enumeration for d = {} is not supported".format(d))
    if d == 2 and ambient.factors != (1,):
        raise Unsupported("quadratic points are only enumerated on P1")
    if B < 0:
        return iter(())
    if _count_box(ambient, B) > max_candidates:
        raise BudgetExceeded(
            "rational box for B = {:.6g} exceeds {} candidates".format(
                B, max_candidates
            )
        )
    if d == 1:
        return _rational_points(ambient, B)
    return itertools.chain(
        _rational_points(ambient, B), quadratic_points(B, max_candidates)
    )
