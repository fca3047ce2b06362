from fractions import Fraction
import math

from arith_dyn.arith import HeightValue
from arith_dyn.arith import bit_size
from arith_dyn.exceptions import InvalidPoint
from arith_dyn.exceptions import NotAMorphismAtPoint
from arith_dyn.projective.endomorphism import evaluate
from arith_dyn.projective.point import block_height
from arith_dyn.projective.point import integral_height
from arith_dyn.projective.point import point_canonicalize
from arith_dyn.projective.resultant import binary_resultant


def normalize_integral(ints):
    """Primitive integer block with a positive leftmost nonzero entry."""
    g = math.gcd(*ints)
    if g == 0:
        raise NotAMorphismAtPoint("image block vanishes identically")
    lead = next(v for v in ints if v)
    if lead < 0:
        g = -g
    if g == 1:
        return tuple(ints)
    return tuple(v // g for v in ints)


class PointIterator(object):
    """Walks the forward orbit of one point with exact coordinates.

    Rational points travel as primitive integer blocks, which makes
    ``key`` a cheap exact hash of the projective point. Quadratic points
    travel as canonical ProjPoints.
    """

    def __init__(self, f, point):
        if point.ambient != f.ambient:
            raise InvalidPoint("point {} is not in {}".format(point, f.ambient))
        self.f = f
        self.ambient = f.ambient
        self.steps = 0
        self._rational = point.is_rational
        if self._rational:
            self._state = point.integral_blocks()
            self._moduli = [self._modulus(i) for i in range(len(self.ambient))]
        else:
            self._state = point

    def _modulus(self, i):
        # the gcd of a P^1 image pair divides the resultant
        if self.ambient.factors[i] != 1:
            return None
        R = abs(binary_resultant(self.f, i))
        return R or None

    @property
    def key(self):
        return self._state

    def step(self):
        if self._rational:
            images = []
            for i, block in enumerate(self._state):
                values = self.f.evaluate_block(i, block)
                R = self._moduli[i]
                if R is not None and any(values):
                    g = math.gcd(R, *(v % R for v in values))
                    lead = next(v for v in values if v)
                    if lead < 0:
                        g = -g
                    images.append(tuple(v // g for v in values))
                else:
                    images.append(normalize_integral(values))
            self._state = tuple(images)
        else:
            self._state = evaluate(self.f, self._state)
        self.steps += 1
        return self

    def point(self):
        if self._rational:
            return point_canonicalize(
                [[Fraction(v) for v in block] for block in self._state],
                self.ambient,
            )
        return self._state

    def factor_heights(self):
        if self._rational:
            return [integral_height(block) for block in self._state]
        return [
            block_height(block, self._state.field, n)
            for block, n in zip(self._state.blocks, self.ambient.factors)
        ]

    def height(self, combine="sum"):
        heights = self.factor_heights()
        if combine == "sum":
            total = heights[0]
            for h in heights[1:]:
                total = total + h
            return total
        top = max(heights, key=lambda h: h.value)
        return HeightValue(top.value, max(h.error for h in heights))

    def bits(self):
        if self._rational:
            return max(abs(v).bit_length() for block in self._state for v in block)
        return max(bit_size(c) for block in self._state.blocks for c in block)

    def block_keys(self):
        """Exact per-factor keys of the current point."""
        if self._rational:
            return tuple(self._state)
        return tuple(self._state.blocks)
