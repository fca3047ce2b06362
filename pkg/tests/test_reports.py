import csv
import io
import math

import pytest

from arith_dyn.elliptic import torsion_count_ubc
from arith_dyn.exceptions import ParseError
from arith_dyn.reports import HEADERS
from arith_dyn.reports import family_rows
from arith_dyn.reports import report_kind
from arith_dyn.reports import torsion_rows
from arith_dyn.reports import verify_report
from arith_dyn.reports import write_rows
from arith_dyn.reports import zfd_rows
from arith_dyn.search import family_ubc_experiment
from arith_dyn.search import zf_d_search
from arith_dyn.utils import format_real
from arith_dyn.utils import parse_bound
from arith_dyn.utils import parse_range


def write_report(path, kind, rows):
    with open(str(path), "w", newline="") as f:
        write_rows(f, kind, rows)
    return str(path)


def test_parse_bound():
    assert parse_bound("log100") == pytest.approx(math.log(100))
    assert parse_bound("log 2") == pytest.approx(math.log(2))
    assert parse_bound("log(5/2)") == pytest.approx(math.log(2.5))
    assert parse_bound("1.5") == 1.5
    with pytest.raises(ParseError):
        parse_bound("log(-1)")
    with pytest.raises(ParseError):
        parse_bound("large")


def test_parse_range():
    assert parse_range("-2..1") == [-2, -1, 0, 1]
    assert parse_range("0, -1, 1/2") == [0, -1, 0.5]
    with pytest.raises(ParseError):
        parse_range("3..1")


def test_format_real():
    assert format_real(math.log(2)) == "0.69314718056"
    assert format_real(1.0) == "1"
    assert format_real(float("inf")) == "inf"


def test_zfd_rows_and_verify(tmp_path, basilica_map):
    report = zf_d_search(basilica_map, 2, math.log(100))
    rows = list(zfd_rows(report))
    assert len(rows) == len(report.found)
    path = write_report(tmp_path / "zfd.csv", "zfd", rows)

    with open(path, newline="") as f:
        parsed = list(csv.reader(f))
    assert tuple(parsed[0]) == HEADERS["zfd"]
    assert report_kind(parsed[0]) == "zfd"
    fields = {row[1] for row in parsed[1:]}
    assert "Q" in fields and "Q(sqrt(5))" in fields

    result = verify_report(path)
    assert result.kind == "zfd"
    assert result.checked == len(rows)
    assert result.ok


def test_verify_detects_tampering(tmp_path, basilica_map):
    report = zf_d_search(basilica_map, 1, math.log(100))
    rows = [list(row) for row in zfd_rows(report)]
    rows[0][-1] = rows[0][-1] + 1
    path = write_report(tmp_path / "bad.csv", "zfd", rows)
    result = verify_report(path)
    assert not result.ok
    assert len(result.failures) == 1


def test_family_and_torsion_round_trip(tmp_path):
    family = family_ubc_experiment("x^2 + c", [-2, 0], 1, math.log(100))
    path = write_report(tmp_path / "family.csv", "family", family_rows(family))
    assert verify_report(path).ok

    torsion = torsion_count_ubc([(0, 1), (-43, 166), (0, 0)])
    path = write_report(tmp_path / "torsion.csv", "torsion", torsion_rows(torsion))
    result = verify_report(path)
    assert result.ok
    assert result.checked == 2


def test_reports_are_deterministic(chebyshev_map):
    first = io.StringIO()
    second = io.StringIO()
    write_rows(first, "zfd", zfd_rows(zf_d_search(chebyshev_map, 1, 2.0)))
    write_rows(
        second, "zfd", zfd_rows(zf_d_search(chebyshev_map, 1, 2.0, workers=2))
    )
    assert first.getvalue() == second.getvalue()


def test_unknown_header_rejected(tmp_path):
    path = tmp_path / "other.csv"
    path.write_text("a,b,c\n1,2,3\n")
    with pytest.raises(ParseError):
        verify_report(str(path))
