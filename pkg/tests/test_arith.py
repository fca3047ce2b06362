from fractions import Fraction
import math

from hypothesis import given
from hypothesis import strategies as st
import pytest

from arith_dyn.arith import QuadExt
from arith_dyn.arith import abs_height_alg
from arith_dyn.arith import log_error
from arith_dyn.arith import min_poly
from arith_dyn.arith import parse_algnum
from arith_dyn.arith import quad_reduce
from arith_dyn.arith import rat_normalize
from arith_dyn.arith import sqrt_rat
from arith_dyn.exceptions import DivisionByZero
from arith_dyn.exceptions import FieldMismatch
from arith_dyn.exceptions import ParseError


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)
nonzero_rationals = rationals.filter(lambda q: q != 0)
radicands = st.sampled_from([-7, -3, -1, 2, 3, 5, 6, 10])


def test_rat_normalize():
    assert rat_normalize(6, -4) == Fraction(-3, 2)
    with pytest.raises(DivisionByZero):
        rat_normalize(1, 0)


def test_sqrt_reduces_radicand():
    assert sqrt_rat(8) == 2 * sqrt_rat(2)
    assert sqrt_rat(Fraction(9, 4)) == Fraction(3, 2)
    assert sqrt_rat(2) * sqrt_rat(2) == 2
    assert sqrt_rat(-4) == quad_reduce(0, 2, -1)


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        sqrt_rat(2) + sqrt_rat(3)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        sqrt_rat(2) / 0


@given(rationals, nonzero_rationals, radicands, nonzero_rationals, nonzero_rationals)
def test_field_axioms(a, b, D, c, e):
    x = quad_reduce(a, b, D)
    y = quad_reduce(c, e, D)
    assert (x * y) / y == x
    assert x - x == 0
    assert x * x.conjugate() == x.norm()


@given(rationals, nonzero_rationals, radicands)
def test_min_poly_vanishes(a, b, D):
    x = quad_reduce(a, b, D)
    p = min_poly(x)
    assert p(x) == 0
    assert p(x.conjugate()) == 0


@pytest.mark.parametrize(
    "text,expected",
    [
        ("3/4", math.log(4)),
        ("-7", math.log(7)),
        ("1", 0.0),
        ("i", 0.0),
        ("sqrt(2)", math.log(2) / 2),
        ("(1+sqrt(5))/2", math.log((1 + math.sqrt(5)) / 2) / 2),
    ],
)
def test_abs_height(text, expected):
    h = abs_height_alg(parse_algnum(text))
    assert h.value == pytest.approx(expected, abs=1e-12)


@given(rationals, nonzero_rationals, radicands)
def test_height_galois_invariant(a, b, D):
    x = quad_reduce(a, b, D)
    assert abs_height_alg(x).value == pytest.approx(
        abs_height_alg(x.conjugate()).value, abs=1e-9
    )


def test_log_error_grows_with_magnitude():
    assert log_error(0.5) == 1e-12
    huge = Fraction(2) ** 4000000
    h = abs_height_alg(huge)
    assert h.value == pytest.approx(4000000 * math.log(2))
    # one ulp of a ~2.8e6 log is far above the fixed floor
    assert h.error >= h.value * 2.0 ** -50 > 1e-12


def test_parse_algnum():
    assert parse_algnum("(1+sqrt(5))/2") == QuadExt(Fraction(1, 2), Fraction(1, 2), 5)
    assert parse_algnum("2*i") == quad_reduce(0, 2, -1)
    assert parse_algnum("sqrt(12)") == 2 * sqrt_rat(3)
    with pytest.raises(ParseError):
        parse_algnum("sqrt(1+sqrt(2))")
    with pytest.raises(ParseError):
        parse_algnum("2**")
