from dataclasses import dataclass
from fractions import Fraction
import math
import numbers
import re
from typing import Optional
from typing import Tuple

from arith_dyn.arith import HeightValue
from arith_dyn.arith import QuadExt
from arith_dyn.arith import abs_height_alg
from arith_dyn.arith import alg_key
from arith_dyn.arith import as_rat
from arith_dyn.arith import conjugate
from arith_dyn.arith import field_of
from arith_dyn.arith import log_error
from arith_dyn.arith import log_int
from arith_dyn.exceptions import FieldMismatch
from arith_dyn.exceptions import InvalidPoint
from arith_dyn.exceptions import ParseError
from arith_dyn.exceptions import UnsupportedField


@dataclass(frozen=True)
class Ambient(object):
    """P^{n_1} x ... x P^{n_k}; a single factor is plain P^N."""

    factors: Tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(n) for n in self.factors)
        if not factors or any(n < 1 for n in factors):
            raise ValueError("bad ambient factors: {}".format(self.factors))
        object.__setattr__(self, "factors", factors)

    @classmethod
    def parse(cls, text):
        names = re.split(r"\s*[xX×]\s*", text.strip())
        factors = []
        for name in names:
            m = re.fullmatch(r"P\^?(\d+)", name.strip())
            if m is None:
                raise ParseError("unknown ambient {!r}".format(text), text=text)
            factors.append(int(m.group(1)))
        return cls(tuple(factors))

    @property
    def is_product(self):
        return len(self.factors) > 1

    def __len__(self):
        return len(self.factors)

    def __str__(self):
        return "x".join("P{}".format(n) for n in self.factors)


P1 = Ambient((1,))


@dataclass(frozen=True)
class ProjPoint(object):
    """A point in canonical form: in every block the leftmost nonzero
    coordinate is exactly 1. ``field`` is None over Q, else the D of
    Q(sqrt(D)). Build points with point_canonicalize().
    """

    ambient: Ambient
    blocks: Tuple[Tuple[object, ...], ...]
    field: Optional[int] = None

    @property
    def is_rational(self):
        return self.field is None

    def factor(self, i):
        return ProjPoint(
            Ambient((self.ambient.factors[i],)),
            (self.blocks[i],),
            _field_of_blocks((self.blocks[i],)),
        )

    def integral_blocks(self):
        """Coprime integer coordinates per block (rational points only)."""
        if not self.is_rational:
            raise UnsupportedField("point {} is not rational".format(self))
        return tuple(integral_block(block) for block in self.blocks)

    def affine(self):
        """Affine coordinate X/Y of a P^1 point, None at infinity."""
        if self.ambient.factors != (1,):
            raise InvalidPoint("affine coordinate needs a P^1 point")
        x, y = self.blocks[0]
        if y == 0:
            return None
        return x / y

    def sort_key(self):
        return (
            self.field or 0,
            tuple(tuple(alg_key(c) for c in block) for block in self.blocks),
        )

    def __str__(self):
        return ";".join(
            "(" + " : ".join(str(c) for c in block) + ")"
            for block in self.blocks
        )

    def __repr__(self):
        return "ProjPoint({})".format(self)


def _coerce_coordinate(c):
    if isinstance(c, QuadExt):
        return c
    if isinstance(c, (Fraction, numbers.Rational, str)):
        return as_rat(c)
    raise InvalidPoint("unsupported coordinate {!r}".format(c))


def _field_of_blocks(blocks):
    fields = {field_of(c) for block in blocks for c in block} - {None}
    if len(fields) > 1:
        raise FieldMismatch(
            "coordinates from several fields: {}".format(sorted(fields))
        )
    return fields.pop() if fields else None


def point_canonicalize(raw_blocks, ambient=None):
    """Scale every block so that its leftmost nonzero coordinate is 1."""
    if raw_blocks and not isinstance(raw_blocks[0], (list, tuple)):
        raw_blocks = [raw_blocks]
    blocks = [[_coerce_coordinate(c) for c in block] for block in raw_blocks]
    if ambient is None:
        ambient = Ambient(tuple(len(block) - 1 for block in blocks))
    if len(blocks) != len(ambient.factors) or any(
        len(block) != n + 1 for block, n in zip(blocks, ambient.factors)
    ):
        raise InvalidPoint(
            "coordinates {} do not fit {}".format(raw_blocks, ambient)
        )
    _field_of_blocks(blocks)

    canonical = []
    for block in blocks:
        lead = next((c for c in block if c != 0), None)
        if lead is None:
            raise InvalidPoint("all-zero block in {}".format(raw_blocks))
        if lead == 1:
            canonical.append(tuple(block))
        else:
            canonical.append(tuple(c / lead for c in block))
    canonical = tuple(canonical)
    return ProjPoint(ambient, canonical, _field_of_blocks(canonical))


def integral_block(block):
    den = 1
    for c in block:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in block]
    g = math.gcd(*ints)
    return tuple(i // g for i in ints)


def integral_height(ints):
    m = max(abs(v) for v in ints)
    if m == 1:
        return HeightValue(0.0)
    value = log_int(m)
    return HeightValue(value, log_error(value))


def block_height(block, field, n):
    if field is None or all(field_of(c) is None for c in block):
        return integral_height(integral_block(block))
    if n != 1:
        raise UnsupportedField(
            "heights of quadratic points are only available on P^1 factors"
        )
    x, y = block
    if x == 0 or y == 0:
        return HeightValue(0.0)
    # canonical (1 : y) with y = 1/z for the affine coordinate z
    return abs_height_alg(y)


def point_height(point, combine="sum"):
    """Weil height: sum (or max) of the factor heights."""
    heights = [
        block_height(block, point.field, n)
        for block, n in zip(point.blocks, point.ambient.factors)
    ]
    if combine == "sum":
        total = heights[0]
        for h in heights[1:]:
            total = total + h
        return total
    if combine == "max":
        top = max(heights, key=lambda h: h.value)
        return HeightValue(
            top.value,
            max(h.error for h in heights),
            all(h.rigorous for h in heights),
        )
    raise ValueError("combine must be 'sum' or 'max'")


def galois_conjugate(point):
    if point.is_rational:
        return point
    return point_canonicalize(
        [[conjugate(c) for c in block] for block in point.blocks],
        point.ambient,
    )
