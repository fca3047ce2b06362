from fractions import Fraction
import tokenize

import sympy
from sympy.parsing.sympy_parser import convert_xor
from sympy.parsing.sympy_parser import parse_expr
from sympy.parsing.sympy_parser import standard_transformations

from arith_dyn.arith.quadratic import QuadExt
from arith_dyn.arith.quadratic import quad_reduce
from arith_dyn.arith.quadratic import sqrt_rat
from arith_dyn.exceptions import DivisionByZero
from arith_dyn.exceptions import ParseError


TRANSFORMATIONS = standard_transformations + (convert_xor,)

IMAGINARY_NAMES = ("i", "I")


def sympify_text(text, local_dict=None, evaluate=True):
    """parse_expr with ^ accepted as power; errors become ParseError."""
    try:
        return parse_expr(
            text,
            local_dict=local_dict,
            transformations=TRANSFORMATIONS,
            evaluate=evaluate,
        )
    except SyntaxError as e:
        raise ParseError(
            "cannot parse {!r}: {}".format(text, e.msg),
            text=text,
            line=e.lineno or 1,
            column=e.offset or 0,
        )
    except (tokenize.TokenError, TypeError, ValueError) as e:
        raise ParseError("cannot parse {!r}: {}".format(text, e), text=text)


def _evaluate(expr, text):
    if expr.is_Integer:
        return Fraction(int(expr))
    if expr.is_Rational:
        return Fraction(int(expr.p), int(expr.q))
    if expr is sympy.I or (expr.is_Symbol and expr.name in IMAGINARY_NAMES):
        return quad_reduce(0, 1, -1)
    if expr.is_Add:
        total = Fraction(0)
        for arg in expr.args:
            total = total + _evaluate(arg, text)
        return total
    if expr.is_Mul:
        product = Fraction(1)
        for arg in expr.args:
            product = product * _evaluate(arg, text)
        return product
    if expr.is_Pow:
        base, exp = expr.args
        if exp.is_Integer:
            value = _evaluate(base, text)
            try:
                return value ** int(exp)
            except ZeroDivisionError:
                raise DivisionByZero("division by zero in {!r}".format(text))
        if exp.is_Rational and exp.q == 2 and abs(exp.p) == 1:
            radicand = _evaluate(base, text)
            if isinstance(radicand, QuadExt):
                raise ParseError(
                    "nested radicals are not supported: {!r}".format(text),
                    text=text,
                )
            root = sqrt_rat(radicand)
            if exp.p < 0:
                if root == 0:
                    raise DivisionByZero(
                        "division by zero in {!r}".format(text)
                    )
                return 1 / root
            return root
    raise ParseError(
        "not a rational or quadratic number: {!r}".format(text), text=text
    )


def parse_algnum(text):
    """Parse '3', '-1/2', 'sqrt(2)', '(1+sqrt(5))/2', '2*i' into an AlgNum."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    expr = sympify_text(str(text), evaluate=False)
    return _evaluate(expr, str(text))
