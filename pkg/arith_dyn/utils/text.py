from fractions import Fraction
import math
import re

from arith_dyn.arith import parse_algnum
from arith_dyn.exceptions import ParseError
from arith_dyn.projective import point_canonicalize


_LOG_BOUND = re.compile(r"^log\s*\(?\s*([^()\s]+)\s*\)?$")

_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_bound(text):
    """Height bound: '1.5', 'log100', 'log 2', 'log(5/2)'."""
    if isinstance(text, (int, float)):
        return float(text)
    body = str(text).strip()
    m = _LOG_BOUND.match(body)
    try:
        if m:
            value = Fraction(m.group(1))
            if value <= 0:
                raise ParseError("log of a non-positive number", text=body)
            return math.log(value.numerator) - math.log(value.denominator)
        return float(body)
    except ValueError:
        raise ParseError("bad height bound {!r}".format(body), text=body)


def parse_point(text, ambient=None):
    """'2:1', '(1 : 1/2)', '1:0;0:1' or '(1:sqrt(2))' into a ProjPoint.

    Blocks are separated by ';', coordinates by ':'.
    """
    blocks = []
    for position, chunk in enumerate(str(text).split(";")):
        chunk = chunk.strip()
        if chunk.startswith("(") and chunk.endswith(")"):
            chunk = chunk[1:-1]
        coords = [c.strip() for c in chunk.split(":")]
        if len(coords) < 2 or not all(coords):
            raise ParseError(
                "expected 'x0 : x1 ...' in block {!r}".format(chunk),
                text=text,
                column=position,
            )
        blocks.append([parse_algnum(c) for c in coords])
    return point_canonicalize(blocks, ambient)


def parse_range(text):
    """'-2..1' -> [-2, -1, 0, 1]; '0,-1,1/2' -> explicit values."""
    text = str(text).strip()
    m = _RANGE.match(text)
    if m:
        lo, hi = int(m.group(1)), int(m.group(2))
        if lo > hi:
            raise ParseError("empty range {!r}".format(text), text=text)
        return [Fraction(v) for v in range(lo, hi + 1)]
    try:
        return [Fraction(v.strip()) for v in text.split(",") if v.strip()]
    except ValueError:
        raise ParseError("bad parameter list {!r}".format(text), text=text)


def format_real(value, digits=12):
    """Reals with ``digits`` significant digits; exact rationals as p/q."""
    if isinstance(value, Fraction):
        return str(value)
    if value is None:
        return ""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return "{:.{}g}".format(value, digits)
