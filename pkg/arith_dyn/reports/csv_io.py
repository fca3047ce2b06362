import csv

from arith_dyn.arith import min_poly
from arith_dyn.utils import format_real


HEADERS = {
    "zfd": (
        "map", "field", "min_poly", "point",
        "h", "h_err", "hhat", "hhat_err", "tail", "cycle",
    ),
    "orbit": (
        "map", "point", "status", "tail", "cycle", "steps", "h_last", "h_last_err",
    ),
    "family": ("family", "parameter", "value", "d", "bound", "count", "points"),
    "torsion": ("a", "b", "order", "structure", "exponent", "points"),
    "arith-degree": (
        "map", "point", "n", "ratio", "root", "estimate", "verdict", "delta",
    ),
}

POINT_SEPARATOR = " | "


def report_kind(header):
    """Report kind for a CSV header row, None when unknown."""
    header = tuple(h.strip() for h in header)
    for kind, columns in HEADERS.items():
        if header == columns:
            return kind
    return None


def write_rows(stream, kind, rows):
    writer = csv.writer(stream, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
    writer.writerow(HEADERS[kind])
    for row in rows:
        writer.writerow(row)


def field_name(D):
    return "Q" if D is None else "Q(sqrt({}))".format(D)


def _min_poly_text(point):
    if point.ambient.factors != (1,):
        return ""
    alpha = point.affine()
    if alpha is None:
        return ""
    return str(min_poly(alpha))


def zfd_rows(report, digits=12):
    for item in report.found:
        record = item.record
        yield (
            report.map_text,
            field_name(item.point.field),
            _min_poly_text(item.point),
            str(item.point),
            format_real(item.height.value, digits),
            format_real(item.height.error, digits),
            # preperiodic points have hhat = 0 exactly
            "0",
            "0",
            record.tail_length,
            record.cycle_length,
        )


def orbit_rows(map_text, record, digits=12):
    last = record.height_trace[-1]
    yield (
        map_text,
        str(record.start),
        str(record.status),
        record.tail_length,
        "" if record.cycle_length is None else record.cycle_length,
        len(record.points) - 1,
        format_real(last.value, digits),
        format_real(last.error, digits),
    )


def family_rows(report, digits=12):
    for value in sorted(report.counts):
        points = sorted(report.reports[value].points, key=lambda P: P.sort_key())
        yield (
            report.family,
            report.parameter,
            str(value),
            report.d,
            format_real(report.bound, digits),
            report.counts[value],
            POINT_SEPARATOR.join(str(P) for P in points),
        )


def torsion_rows(report):
    for key in sorted(report.counts):
        a, b = key
        structure = report.structures[key]
        points = sorted(report.points[key], key=lambda P: P.sort_key())
        yield (
            a,
            b,
            structure.order,
            str(structure),
            structure.exponent,
            POINT_SEPARATOR.join(str(P) for P in points),
        )


def arith_degree_rows(map_text, estimate, digits=12):
    for n, (ratio, root) in enumerate(
        zip(estimate.ratio_trace, estimate.root_trace), start=1
    ):
        yield (
            map_text,
            str(estimate.point),
            n,
            format_real(ratio, digits),
            format_real(root, digits),
            format_real(estimate.estimate, digits),
            str(estimate.verdict),
            format_real(estimate.delta, digits),
        )


def zfd_summary(report, digits=12):
    """Structured text summary, one 'key: value' line each."""
    lines = [
        "map: {}".format(report.map_text),
        "d: {}".format(report.d),
        "bound: {}".format(format_real(report.bound, digits)),
        "effective_bound: {}".format(format_real(report.effective_bound, digits)),
        "preperiodic_bound: {}".format(
            format_real(report.preperiodic_bound, digits)
        ),
        "complete: {}".format("yes" if report.complete else "no"),
        "candidates: {}".format(report.candidates),
        "found: {}".format(len(report.found)),
        "unknown: {}".format(report.unknown),
    ]
    for name, count in report.counts_per_field.items():
        lines.append("field {}: {}".format(name, count))
    return lines
