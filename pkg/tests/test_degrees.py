import math

from hypothesis import assume
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st
import numpy as np
import pytest

from arith_dyn.degrees import Classification
from arith_dyn.degrees import DegreeSource
from arith_dyn.degrees import Iterate
from arith_dyn.degrees import Verdict
from arith_dyn.degrees import arith_degree_estimate
from arith_dyn.degrees import classify_point_polarized
from arith_dyn.degrees import classify_product_point
from arith_dyn.degrees import dyn_degree
from arith_dyn.degrees import height_trace
from arith_dyn.degrees import spectral_radius
from arith_dyn.exceptions import Unresolvable
from arith_dyn.projective import parse_map
from arith_dyn.projective import point_height
from arith_dyn.search import enumerate_points
from arith_dyn.utils import parse_point


GOLDEN = (1 + math.sqrt(5)) / 2


@pytest.mark.parametrize(
    "matrix,expected",
    [
        ([[1, 1], [1, 0]], GOLDEN),
        ([[2, 0], [0, 3]], 3.0),
        ([[0, 1], [-1, 0]], 1.0),
        ([[1, 1], [0, 1]], 1.0),
        ([[-4]], 4.0),
        ([[2, 1, 0], [0, 2, 1], [0, 0, 2]], 2.0),
    ],
)
def test_spectral_radius(matrix, expected):
    rho = spectral_radius(matrix)
    assert rho.value == pytest.approx(expected, abs=1e-12)
    assert rho.lower <= expected + 1e-15
    assert rho.upper >= expected - 1e-15


def test_spectral_radius_rejects_zero():
    with pytest.raises(ValueError):
        spectral_radius([[0, 0], [0, 0]])


def test_spectral_radius_agrees_with_numpy():
    M = [[3, -1, 2], [1, 0, 4], [-2, 5, 1]]
    expected = max(abs(np.linalg.eigvals(np.array(M, dtype=float))))
    assert spectral_radius(M).value == pytest.approx(expected, rel=1e-9)


def test_dyn_degree_sources(square_map):
    delta = dyn_degree(square_map)
    assert delta.value == 2.0
    assert delta.source is DegreeSource.POLARIZED

    product = parse_map("P1xP1: [x^2, y^2]; [x^3, y^3]")
    delta = dyn_degree(product)
    assert delta.value == 3.0
    assert delta.source is DegreeSource.PRODUCT_RULE

    delta = dyn_degree(Iterate(square_map, 3))
    assert delta.value == 8.0
    assert delta.source is DegreeSource.POWER_RULE


def test_dyn_degree_from_ns_matrix():
    f = parse_map("P1xP1: [x^2, y^2]; [x^2, y^2]", ns_matrix=[[2, 0], [0, 2]])
    delta = dyn_degree(f)
    assert delta.value == pytest.approx(2.0)
    assert delta.source is DegreeSource.SPECTRAL_RADIUS


def test_dyn_degree_power_rule_matches_iterate(basilica_map):
    assert dyn_degree(basilica_map.iterate(2)).value == dyn_degree(
        Iterate(basilica_map, 2)
    ).value


def test_dyn_degree_unresolvable():
    with pytest.raises(Unresolvable):
        dyn_degree("not a map")


def test_classify_polarized(basilica_map):
    assert (
        classify_point_polarized(basilica_map, parse_point("1:1"))
        is Classification.PREPERIODIC
    )
    assert (
        classify_point_polarized(basilica_map, parse_point("2:1"))
        is Classification.MAX_DEGREE
    )


def test_classify_product_point():
    f = parse_map("P1xP1: [x^2, y^2]; [x^3, y^3]")
    result = classify_product_point(f, parse_point("2:1;1:1"))
    assert result.factors == (Classification.MAX_DEGREE, Classification.PREPERIODIC)
    assert result.alpha == 2.0
    assert result.in_zf

    result = classify_product_point(f, parse_point("1:1;2:1"))
    assert result.alpha == 3.0
    assert not result.in_zf


def test_arith_degree_certified(square_map):
    estimate = arith_degree_estimate(square_map, parse_point("2:1"))
    assert estimate.verdict is Verdict.EQUALS_DELTA
    assert estimate.estimate == 2.0

    estimate = arith_degree_estimate(square_map, parse_point("-1:1"))
    assert estimate.verdict is Verdict.EXACT_ONE
    assert estimate.estimate == 1.0


def test_arith_degree_factor_max():
    f = parse_map("P1xP1: [x^2, y^2]; [x^3, y^3]")
    estimate = arith_degree_estimate(f, parse_point("2:1;0:1"))
    assert estimate.verdict is Verdict.FACTOR_MAX
    assert estimate.estimate == 2.0
    assert estimate.delta == 3.0


def test_arith_degree_raw_estimate_bounded():
    f = parse_map("P1xP1: [x^2, y^2]; [x^3, y^3]")
    estimate = arith_degree_estimate(f, parse_point("2:1;3:1"), certify=False)
    assert estimate.verdict is Verdict.ESTIMATE
    assert 1.0 <= estimate.estimate <= estimate.delta
    assert estimate.estimate == pytest.approx(3.0, rel=1e-2)


def test_height_trace_extrapolates(chebyshev_map):
    trace, exact, cycled = height_trace(
        chebyshev_map, parse_point("3:1"), 20, max_bits=256
    )
    assert not cycled
    assert exact < 20
    assert len(trace) == 21
    assert trace[-1] / trace[-2] == pytest.approx(2.0, rel=1e-5)


@st.composite
def integer_matrices(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    entries = st.integers(min_value=-5, max_value=5)
    rows = draw(
        st.lists(
            st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
    return np.array(rows, dtype=np.int64)


@settings(max_examples=60, deadline=None)
@given(integer_matrices(), st.integers(min_value=2, max_value=3))
def test_spectral_radius_power_law(M, k):
    # nilpotent matrices have rho = 0
    assume(np.linalg.matrix_power(M, len(M)).any())
    Mk = np.linalg.matrix_power(M, k)
    rho = spectral_radius(M.tolist()).value
    rho_k = spectral_radius(Mk.tolist()).value
    assert rho_k == pytest.approx(rho ** k, rel=1e-9)


@pytest.mark.parametrize(
    "text", ["P1:[x^2 - 2*y^2, y^2]", "P1:[x^2 - y^2, y^2]", "P1:[x^2 - x*y, y^2]"]
)
def test_classification_stable_under_iterate(text):
    f = parse_map(text)
    f2 = f.iterate(2)
    points = list(enumerate_points("P1", 1, math.log(20)))
    assert len(points) > 100
    for P in points:
        assert classify_point_polarized(f, P) is classify_point_polarized(f2, P)


def test_height_choice_does_not_change_alpha():
    f = parse_map("P1xP1: [x^2, y^2]; [x^3, y^3]")
    P = parse_point("2:1;2:1")
    h_sum = point_height(P, "sum").value
    h_max = point_height(P, "max").value
    assert h_max <= h_sum <= 2 * h_max

    certified = {
        combine: arith_degree_estimate(f, P, combine=combine).estimate
        for combine in ("sum", "max")
    }
    assert certified == {"sum": 3.0, "max": 3.0}

    # the uncertified sum trace converges like 3 - (2/3)^n
    raw_sum = arith_degree_estimate(f, P, combine="sum", certify=False)
    raw_max = arith_degree_estimate(f, P, combine="max", certify=False)
    assert raw_max.estimate == pytest.approx(3.0, abs=1e-3)
    assert raw_sum.estimate == pytest.approx(raw_max.estimate, abs=1e-2)
