import csv
from dataclasses import dataclass
from dataclasses import field
from fractions import Fraction
from typing import List
from typing import Optional

from arith_dyn.elliptic import EllipticCurve
from arith_dyn.elliptic import ell_order
from arith_dyn.elliptic import parse_ell_point
from arith_dyn.exceptions import ArithDynError
from arith_dyn.exceptions import ParseError
from arith_dyn.logger import logger
from arith_dyn.projective import from_affine
from arith_dyn.projective import galois_conjugate
from arith_dyn.projective import parse_map
from arith_dyn.reports.csv_io import POINT_SEPARATOR
from arith_dyn.reports.csv_io import report_kind
from arith_dyn.search import verify_orbit_row
from arith_dyn.search.orbit import orbit
from arith_dyn.utils import parse_point


@dataclass
class VerifyReport(object):
    path: str
    kind: Optional[str] = None
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def _int(text):
    return int(text) if text.strip() else None


def _map(maps, text):
    if text not in maps:
        maps[text] = parse_map(text)
    return maps[text]


def _check_zfd(row, maps):
    f = _map(maps, row["map"])
    P = parse_point(row["point"], f.ambient)
    tail, cycle = int(row["tail"]), int(row["cycle"])
    if not verify_orbit_row(f, P, tail, cycle):
        return "cycle ({}, {}) does not hold at {}".format(tail, cycle, P)
    if not P.is_rational and not verify_orbit_row(f, galois_conjugate(P), tail, cycle):
        return "Galois conjugate of {} has another orbit shape".format(P)
    return None


def _check_orbit(row, maps):
    f = _map(maps, row["map"])
    P = parse_point(row["point"], f.ambient)
    if row["status"] == "Cycle":
        if not verify_orbit_row(f, P, int(row["tail"]), _int(row["cycle"])):
            return "cycle does not hold at {}".format(P)
        return None
    record = orbit(f, P, max_steps=int(row["steps"]))
    if record.is_cycle:
        return "{} reported {} but cycles".format(P, row["status"])
    return None


def _check_family(row, maps):
    value = Fraction(row["value"])
    key = (row["family"], value)
    if key not in maps:
        maps[key] = from_affine(row["family"], {row["parameter"]: value})
    f = maps[key]
    points = [p for p in row["points"].split(POINT_SEPARATOR.strip()) if p.strip()]
    if len(points) != int(row["count"]):
        return "count {} but {} points listed".format(row["count"], len(points))
    for text in points:
        P = parse_point(text, f.ambient)
        if not orbit(f, P).check():
            return "{} is not preperiodic at {} = {}".format(
                P, row["parameter"], value
            )
    return None


def _check_torsion(row, maps):
    curve = EllipticCurve(int(row["a"]), int(row["b"]))
    order = int(row["order"])
    points = [
        parse_ell_point(curve, p)
        for p in row["points"].split(POINT_SEPARATOR.strip())
        if p.strip()
    ]
    if len(set(points)) != order:
        return "order {} but {} distinct points".format(order, len(set(points)))
    for P in points:
        n = 1 if P.is_zero else ell_order(curve, P, order)
        if n is None or order % n:
            return "{} has no order dividing {}".format(P, order)
    return None


CHECKS = {
    "zfd": _check_zfd,
    "orbit": _check_orbit,
    "family": _check_family,
    "torsion": _check_torsion,
}


def verify_report(path):
    """Re-parse a CSV report and re-check each certified row exactly."""
    result = VerifyReport(path)
    with open(path, newline="") as f:
        reader = csv.reader(f)
        try:
            header = next(reader)
        except StopIteration:
            raise ParseError("empty report {}".format(path), text=path)
        result.kind = report_kind(header)
        if result.kind not in CHECKS:
            raise ParseError(
                "no verifier for header {}".format(",".join(header)), text=path
            )
        check = CHECKS[result.kind]
        maps = {}
        for line, values in enumerate(reader, start=2):
            row = dict(zip(header, values))
            try:
                problem = check(row, maps)
            except ArithDynError as e:
                problem = str(e)
            result.checked += 1
            if problem is not None:
                message = "{}:{}: {}".format(path, line, problem)
                logger.error(message)
                result.failures.append(message)
    logger.info(
        "verified {} {} rows in {}, {} failures".format(
            result.checked, result.kind, path, len(result.failures)
        )
    )
    return result
