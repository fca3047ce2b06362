from fractions import Fraction
import math

import pytest

from arith_dyn.exceptions import BudgetExceeded
from arith_dyn.exceptions import Unsupported
from arith_dyn.projective import galois_conjugate
from arith_dyn.projective import parse_map
from arith_dyn.search import OrbitStatus
from arith_dyn.search import enumerate_points
from arith_dyn.search import family_ubc_experiment
from arith_dyn.search import integral_points
from arith_dyn.search import is_preperiodic
from arith_dyn.search import orbit
from arith_dyn.search import parameter_grid
from arith_dyn.search import verify_orbit_row
from arith_dyn.search import zf_d_search
from arith_dyn.utils import parse_point


LOG100 = math.log(100)


def affine_values(report):
    return {P.affine() for P in report.points}


def test_orbit_shape(basilica_map):
    record = orbit(basilica_map, parse_point("1:1"))
    assert record.status is OrbitStatus.CYCLE
    assert (record.tail_length, record.cycle_length) == (1, 2)
    assert record.check()
    assert verify_orbit_row(basilica_map, parse_point("1:1"), 1, 2)
    assert not verify_orbit_row(basilica_map, parse_point("1:1"), 1, 1)


def test_orbit_budget(basilica_map):
    record = orbit(basilica_map, parse_point("2:1"), max_steps=4)
    assert record.status is OrbitStatus.BUDGET
    assert len(record.points) == 5


def test_is_preperiodic_certificates(basilica_map):
    yes = is_preperiodic(basilica_map, parse_point("-1:1"))
    assert yes.verdict is True
    assert yes.record.check()

    no = is_preperiodic(basilica_map, parse_point("2:1"))
    assert no.verdict is False
    assert no.rigorous
    assert no.hhat_lower > 0


def test_is_preperiodic_unknown_without_lower_bound():
    f = parse_map("P2:[x^2, y^2, z^2]")
    certificate = is_preperiodic(f, parse_point("2:3:1"), max_steps=8)
    assert certificate.verdict is None
    assert certificate.label == "Unknown"


def test_is_preperiodic_rejects_products():
    f = parse_map("P1xP1: [x^2, y^2]; [x^2, y^2]")
    with pytest.raises(Unsupported):
        is_preperiodic(f, parse_point("1:1;1:1"))


def test_enumeration_counts():
    assert len(list(integral_points(1, math.log(2)))) == 8
    assert len(list(enumerate_points("P1", 1, math.log(2)))) == 8
    assert len(list(enumerate_points("P1xP1", 1, math.log(2)))) == 48
    assert list(enumerate_points("P1", 1, -1.0)) == []


def test_enumeration_is_monotone():
    counts = [
        len(list(enumerate_points("P1", 2, B))) for B in (0.0, 0.3, 0.5, 0.7)
    ]
    assert counts == sorted(counts)


def test_enumeration_guards():
    with pytest.raises(Unsupported):
        enumerate_points("P1", 3, 1.0)
    with pytest.raises(Unsupported):
        enumerate_points("P2", 2, 1.0)
    with pytest.raises(BudgetExceeded):
        enumerate_points("P1", 1, LOG100, max_candidates=100)


def test_zfd_square_map_quadratic(square_map):
    report = zf_d_search(square_map, 2, LOG100)
    assert report.effective_bound == 0.0
    assert report.complete
    assert len(report.found) == 10
    assert report.counts_per_field == {
        "Q": 4,
        "Q(sqrt(-1))": 2,
        "Q(sqrt(-3))": 4,
    }


def test_zfd_basilica(basilica_map):
    report = zf_d_search(basilica_map, 1, LOG100)
    assert report.complete
    assert affine_values(report) == {None, 0, 1, -1}
    assert report.unknown == 0
    for item in report.found:
        assert item.record.check()


def test_zfd_galois_stable(basilica_map):
    report = zf_d_search(basilica_map, 2, LOG100)
    found = set(report.points)
    for item in report.found:
        conjugate = galois_conjugate(item.point)
        assert conjugate in found
        other = orbit(basilica_map, conjugate)
        assert (other.tail_length, other.cycle_length) == (
            item.record.tail_length,
            item.record.cycle_length,
        )
    assert report.counts_per_field["Q"] == 4
    assert report.counts_per_field["Q(sqrt(2))"] >= 2
    assert report.counts_per_field["Q(sqrt(5))"] >= 4


def test_zfd_matches_brute_force(basilica_map):
    B = math.log(20)
    report = zf_d_search(basilica_map, 1, B)
    oracle = {
        P
        for P in enumerate_points("P1", 1, B)
        if orbit(basilica_map, P, max_steps=64, max_bits=4096).is_cycle
    }
    assert set(report.points) == oracle


def test_zfd_monotone_in_bound(chebyshev_map):
    small = zf_d_search(chebyshev_map, 1, 0.0)
    large = zf_d_search(chebyshev_map, 1, LOG100)
    assert affine_values(small) == {None, 0, 1, -1}
    assert set(small.points) <= set(large.points)
    assert len(large.found) == 6


def test_zfd_iterate_has_same_points(basilica_map):
    report = zf_d_search(basilica_map, 1, LOG100)
    iterated = zf_d_search(basilica_map.iterate(2), 1, LOG100)
    assert set(iterated.points) == set(report.points)


def test_zfd_independent_of_workers(chebyshev_map):
    serial = zf_d_search(chebyshev_map, 1, LOG100, workers=1)
    parallel = zf_d_search(chebyshev_map, 1, LOG100, workers=2)
    assert serial.points == parallel.points


def test_zfd_needs_lower_bound():
    with pytest.raises(Unsupported):
        zf_d_search(parse_map("P2:[x^2, y^2, z^2]"), 1, 1.0)


def test_family_counts():
    report = family_ubc_experiment("x^2 + c", [0, -1, -2, 1], 1, LOG100)
    assert report.counts == {
        Fraction(-2): 6,
        Fraction(-1): 4,
        Fraction(0): 4,
        Fraction(1): 1,
    }
    assert report.maximum == 6
    assert report.argmax == [Fraction(-2)]
    assert report.histogram == {1: 1, 4: 2, 6: 1}
    assert affine_values(report.reports[Fraction(-2)]) == {None, 0, 1, -1, 2, -2}


def test_family_skips_degenerate_members():
    report = family_ubc_experiment("c*x^2 + 1", [0, 1], 1, LOG100)
    assert [value for value, _ in report.skipped] == [Fraction(0)]
    assert Fraction(1) in report.counts


def test_parameter_grid():
    grid = parameter_grid(2)
    assert grid == sorted(set(grid))
    assert Fraction(1, 2) in grid and Fraction(-2) in grid
    assert len(grid) == 7


def test_family_independent_of_workers():
    grid = parameter_grid(2)
    serial = family_ubc_experiment("x^2 + c", grid, 1, LOG100, workers=1)
    parallel = family_ubc_experiment("x^2 + c", grid, 1, LOG100, workers=2)
    assert serial.counts == parallel.counts
    assert serial.argmax == parallel.argmax
    assert serial.histogram == parallel.histogram
    assert serial.counts[Fraction(-2)] == 6
