from dataclasses import dataclass
import functools
import math
import re
from typing import Optional
from typing import Tuple

import sympy

from arith_dyn.arith import as_rat
from arith_dyn.arith.parse import sympify_text
from arith_dyn.exceptions import InvalidPoint
from arith_dyn.exceptions import NotAMorphismAtPoint
from arith_dyn.exceptions import ParseError
from arith_dyn.projective.point import Ambient
from arith_dyn.projective.point import P1
from arith_dyn.projective.point import point_canonicalize


@functools.lru_cache(maxsize=None)
def block_symbols(n):
    """Coordinate symbols of a P^n factor: x, y / x, y, z / x0 .. xn."""
    if n == 1:
        return sympy.symbols("x y")
    if n == 2:
        return sympy.symbols("x y z")
    return sympy.symbols(" ".join("x{}".format(i) for i in range(n + 1)))


def _primitive_block(exprs, gens):
    polys = [sympy.Poly(e, *gens, domain="QQ") for e in exprs]
    den = 1
    nums = []
    for p in polys:
        for c in p.coeffs():
            c = sympy.Rational(c)
            den = den * int(c.q) // math.gcd(den, int(c.q))
            nums.append(c)
    content = 0
    for c in nums:
        content = math.gcd(content, int(c * den))
    if content == 0:
        raise ValueError("a block of zero polynomials is not a map")
    scale = sympy.Rational(den, content)
    return tuple(
        sympy.Poly(p.as_expr() * scale, *gens, domain="ZZ") for p in polys
    )


@dataclass(frozen=True)
class PolyEndo(object):
    """Block-diagonal self-map of a product of projective spaces.

    Block i is a tuple of n_i + 1 homogeneous integer polynomials of one
    common degree r_i in the coordinates of factor i.
    """

    ambient: Ambient
    blocks: Tuple[Tuple[sympy.Poly, ...], ...]
    declared_polarization: Optional[int] = None
    ns_matrix: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __post_init__(self):
        if len(self.blocks) != len(self.ambient.factors):
            raise ValueError("one polynomial block per factor is required")
        degrees = []
        for block, n in zip(self.blocks, self.ambient.factors):
            if len(block) != n + 1:
                raise ValueError(
                    "a P^{} block needs {} polynomials".format(n, n + 1)
                )
            gens = block_symbols(n)
            block_degrees = set()
            for p in block:
                if tuple(p.gens) != tuple(gens):
                    raise ValueError("polynomial variables must be {}".format(gens))
                if p.is_zero:
                    continue
                if not p.is_homogeneous:
                    raise ValueError("{} is not homogeneous".format(p.as_expr()))
                block_degrees.add(p.total_degree())
            if len(block_degrees) != 1:
                raise ValueError("block polynomials must share one degree")
            r = block_degrees.pop()
            if r < 1:
                raise ValueError("block degree must be >= 1")
            degrees.append(r)
        if self.declared_polarization is not None:
            q = int(self.declared_polarization)
            if q <= 1 or any(r != q for r in degrees):
                raise ValueError(
                    "declared polarization {} does not match degrees {}".format(
                        q, degrees
                    )
                )
        if self.ns_matrix is not None:
            rows = tuple(tuple(int(v) for v in row) for row in self.ns_matrix)
            if any(len(row) != len(rows) for row in rows):
                raise ValueError("ns_matrix must be square")
            object.__setattr__(self, "ns_matrix", rows)

    @classmethod
    def from_exprs(cls, ambient, expr_blocks, **kwargs):
        """Build from sympy expressions; rational coefficients are cleared."""
        if isinstance(ambient, str):
            ambient = Ambient.parse(ambient)
        blocks = tuple(
            _primitive_block(exprs, block_symbols(n))
            for exprs, n in zip(expr_blocks, ambient.factors)
        )
        return cls(ambient, blocks, **kwargs)

    @functools.cached_property
    def degrees(self):
        return tuple(
            next(p.total_degree() for p in block if not p.is_zero)
            for block in self.blocks
        )

    @property
    def degree(self):
        """The common degree of every block, or None if they differ."""
        degrees = set(self.degrees)
        return degrees.pop() if len(degrees) == 1 else None

    @property
    def is_single(self):
        return not self.ambient.is_product

    @property
    def is_polarized(self):
        """f^*H = rH with r >= 2 for the (sum of) hyperplane class(es)."""
        r = self.degree
        return r is not None and r >= 2

    @functools.cached_property
    def terms(self):
        return tuple(
            tuple(
                tuple((tuple(m), int(c)) for m, c in p.terms())
                for p in block
            )
            for block in self.blocks
        )

    @property
    def coefficient_norm(self):
        """max |coefficient| over every polynomial."""
        return max(
            abs(c) for block in self.terms for poly in block for _, c in poly
        )

    @property
    def monomial_count(self):
        """max number of monomials in one polynomial."""
        return max(len(poly) for block in self.terms for poly in block)

    def factor(self, i):
        return PolyEndo(
            Ambient((self.ambient.factors[i],)),
            (self.blocks[i],),
        )

    def evaluate_block(self, i, coords):
        """Image coordinates of one block, not normalized."""
        top = self.degrees[i]
        powers = []
        for c in coords:
            row = [1, c]
            for _ in range(top - 1):
                row.append(row[-1] * c)
            powers.append(row)
        images = []
        for poly in self.terms[i]:
            acc = 0
            for monom, coeff in poly:
                term = coeff
                for var, e in enumerate(monom):
                    if e:
                        term = term * powers[var][e]
                acc = acc + term
            images.append(acc)
        return images

    def evaluate(self, point):
        return evaluate(self, point)

    def compose(self, other):
        """self o other."""
        if self.ambient != other.ambient:
            raise ValueError("cannot compose maps on different ambients")
        blocks = []
        for n, outer, inner in zip(self.ambient.factors, self.blocks, other.blocks):
            gens = block_symbols(n)
            sub = dict(zip(gens, [p.as_expr() for p in inner]))
            blocks.append(
                tuple(
                    sympy.Poly(
                        sympy.expand(p.as_expr().xreplace(sub)), *gens, domain="ZZ"
                    )
                    for p in outer
                )
            )
        polarization = None
        if self.declared_polarization and other.declared_polarization:
            polarization = self.declared_polarization * other.declared_polarization
        ns = None
        if self.ns_matrix is not None and other.ns_matrix is not None:
            # (f o g)^* = g^* f^*
            ns = tuple(
                tuple(int(v) for v in row)
                for row in (
                    sympy.Matrix(other.ns_matrix) * sympy.Matrix(self.ns_matrix)
                ).tolist()
            )
        return PolyEndo(
            self.ambient,
            tuple(blocks),
            declared_polarization=polarization,
            ns_matrix=ns,
        )

    def iterate(self, n):
        if n < 1:
            raise ValueError("iterate count must be >= 1")
        result = self
        for _ in range(n - 1):
            result = result.compose(self)
        return result

    def __str__(self):
        body = "; ".join(
            "[" + ", ".join(str(p.as_expr()).replace("**", "^") for p in block) + "]"
            for block in self.blocks
        )
        return "{}:{}".format(self.ambient, body)


def evaluate(f, point):
    """Image of a point, in canonical form."""
    if point.ambient != f.ambient:
        raise InvalidPoint("point {} is not in {}".format(point, f.ambient))
    images = []
    for i, block in enumerate(point.blocks):
        image = f.evaluate_block(i, block)
        if all(c == 0 for c in image):
            raise NotAMorphismAtPoint(
                "{} vanishes identically at {}".format(f, point)
            )
        images.append(image)
    return point_canonicalize(images, f.ambient)


def _split_top_level(text, sep):
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append((start, text[start:i]))
            start = i + 1
    parts.append((start, text[start:]))
    return parts


def parse_map(text, polarization=None, ns_matrix=None):
    """Parse 'P1:[x^2 - y^2, x*y]', 'P1 -> P1 : [...]' or
    'P1xP1: [x^2, y^2]; [x^3, y^3]'.
    """
    offset = 0
    ambient = None
    bracket = text.find("[")
    colon = text.rfind(":", 0, bracket if bracket >= 0 else len(text))
    if colon >= 0:
        header = text[:colon]
        offset = colon + 1
        names = [h.strip() for h in re.split(r"->|→", header)]
        if len(set(names)) != 1:
            raise ParseError(
                "only self-maps are supported: {!r}".format(header),
                text=text,
                column=1,
            )
        ambient = Ambient.parse(names[0])
    body = text[offset:]

    expr_blocks = []
    for start, chunk in _split_top_level(body, ";"):
        stripped = chunk.strip()
        if not (stripped.startswith("[") and stripped.endswith("]")):
            raise ParseError(
                "expected a [..] polynomial block", text=text,
                column=offset + start + 1,
            )
        inner_start = offset + start + chunk.index("[") + 1
        expr_blocks.append(
            [
                (inner_start + s, piece)
                for s, piece in _split_top_level(stripped[1:-1], ",")
            ]
        )

    if ambient is None:
        ambient = Ambient(tuple(len(b) - 1 for b in expr_blocks))
    if len(expr_blocks) != len(ambient.factors):
        raise ParseError(
            "{} blocks given for ambient {}".format(len(expr_blocks), ambient),
            text=text,
            column=offset + 1,
        )

    exprs = []
    for block, n in zip(expr_blocks, ambient.factors):
        gens = block_symbols(n)
        local = {str(g): g for g in gens}
        parsed = []
        for column, piece in block:
            try:
                expr = sympify_text(piece, local_dict=local)
            except ParseError as e:
                raise ParseError(
                    "bad polynomial {!r}".format(piece.strip()),
                    text=text,
                    column=column + e.column,
                )
            extra = expr.free_symbols - set(gens)
            if extra:
                raise ParseError(
                    "unknown variables {} in {!r}".format(
                        sorted(map(str, extra)), piece.strip()
                    ),
                    text=text,
                    column=column + 1,
                )
            parsed.append(expr)
        exprs.append(parsed)

    try:
        return PolyEndo.from_exprs(
            ambient,
            exprs,
            declared_polarization=polarization,
            ns_matrix=ns_matrix,
        )
    except (ValueError, sympy.PolynomialError) as e:
        raise ParseError(str(e), text=text, column=offset + 1)


def from_affine(text, params=None):
    """P^1 map from an affine rational function of x, e.g. 'x^2 + c'."""
    x, y = block_symbols(1)
    local = {"x": x}
    for name, value in (params or {}).items():
        value = as_rat(value)
        local[name] = sympy.Rational(value.numerator, value.denominator)
    expr = sympify_text(text, local_dict=local)
    extra = expr.free_symbols - {x}
    if extra:
        raise ParseError(
            "unassigned parameters {} in {!r}".format(
                sorted(map(str, extra)), text
            ),
            text=text,
        )
    num, den = sympy.fraction(sympy.together(expr))
    num = sympy.Poly(num, x, domain="QQ")
    den = sympy.Poly(den, x, domain="QQ")
    r = max(num.degree(), den.degree())
    if r < 1:
        raise ValueError("{!r} is constant".format(text))

    def homogenize(p):
        return sympy.expand(p.as_expr().subs(x, x / y) * y ** r)

    return PolyEndo.from_exprs(P1, [[homogenize(num), homogenize(den)]])

