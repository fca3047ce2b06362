import functools
import itertools

import click

from arith_dyn import __appname__
from arith_dyn import __version__
from arith_dyn.abelian import MatrixEndo
from arith_dyn.abelian import cross_validate_degree
from arith_dyn.abelian import equivariance_check
from arith_dyn.abelian import parse_matrix
from arith_dyn.abelian import zf_structure_check
from arith_dyn.config import get_config
from arith_dyn.degrees import arith_degree_estimate
from arith_dyn.degrees import classify_point_polarized
from arith_dyn.degrees import classify_product_point
from arith_dyn.degrees import dyn_degree
from arith_dyn.elliptic import EllipticCurve
from arith_dyn.elliptic import parse_ell_point
from arith_dyn.elliptic import torsion_count_ubc
from arith_dyn.elliptic import torsion_subgroup
from arith_dyn.exceptions import ArithDynError
from arith_dyn.exceptions import InvariantViolation
from arith_dyn.exceptions import Unverified
from arith_dyn.heights import canonical_height
from arith_dyn.heights import neron_tate
from arith_dyn.logger import logger
from arith_dyn.logger import set_level
from arith_dyn.projective import morphism_check
from arith_dyn.projective import parse_map
from arith_dyn.projective import point_height
from arith_dyn.reports import arith_degree_rows
from arith_dyn.reports import family_rows
from arith_dyn.reports import orbit_rows
from arith_dyn.reports import torsion_rows
from arith_dyn.reports import verify_report
from arith_dyn.reports import write_rows
from arith_dyn.reports import zfd_rows
from arith_dyn.reports import zfd_summary
from arith_dyn.search import family_ubc_experiment
from arith_dyn.search import orbit as orbit_of
from arith_dyn.search import parameter_grid
from arith_dyn.search import zf_d_search
from arith_dyn.utils import format_real
from arith_dyn.utils import parse_bound
from arith_dyn.utils import parse_point
from arith_dyn.utils import parse_range


def handle_errors(func):
    """Log library errors and exit with their status code."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ArithDynError as e:
            logger.error("{}: {}".format(type(e).__name__, e))
            raise click.exceptions.Exit(e.exit_code)

    return wrapper


def _digits(config):
    return config["output"]["significant_digits"]


def _emit_csv(out, kind, rows):
    with click.open_file(out, "w") as f:
        write_rows(f, kind, rows)


def _load_map(text, polarization=None):
    f = parse_map(text, polarization=polarization)
    try:
        if not morphism_check(f):
            logger.warning("{} is not a morphism (resultant 0)".format(f))
    except Unverified as e:
        logger.warning("morphism check skipped: {}".format(e))
    return f


map_option = click.option(
    "--map", "map_text", required=True, help='e.g. "P1:[x^2 - y^2, x*y]"'
)
point_option = click.option(
    "--point", "point_text", required=True, help='e.g. "2:1" or "(1 : 1/2)"'
)
out_option = click.option(
    "--out", default="-", show_default=True, help="CSV output path."
)


@click.group()
@click.version_option(__version__, prog_name=__appname__)
@click.option("--config", "config_file", default=None, help="YAML file or inline YAML.")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False),
    default=None,
)
@click.option("--workers", type=int, default=None, help="Worker processes.")
@click.pass_context
@handle_errors
def root(ctx, config_file, log_level, workers):
    """
    Exact arithmetic-dynamics experiments: heights, degrees, preperiodic
    points and elliptic-curve torsion.
    """
    config_from_args = {}
    if log_level is not None:
        config_from_args["logging"] = {"level": log_level.upper()}
    if workers is not None:
        config_from_args["workers"] = workers
    config = get_config(config_file, config_from_args)
    set_level(config["logging"]["level"])
    ctx.obj = config


@root.command("height")
@map_option
@point_option
@click.option("--combine", type=click.Choice(["sum", "max"]), default="sum")
@click.pass_obj
@handle_errors
def height(config, map_text, point_text, combine):
    """Weil height, plus the canonical height for polarized maps."""
    f = _load_map(map_text)
    P = parse_point(point_text, f.ambient)
    digits = _digits(config)
    h = point_height(P, combine)
    click.echo("h = {} +- {}".format(format_real(h.value, digits), format_real(h.error, digits)))
    if f.is_single and f.is_polarized:
        hhat = canonical_height(
            f,
            P,
            tol=config["heights"]["tolerance"],
            max_iterations=config["heights"]["max_iterations"],
            max_bits=config["heights"]["max_bits"],
        )
        click.echo(
            "hhat = {} +- {}".format(
                format_real(hhat.value, digits), format_real(hhat.error, digits)
            )
        )


@root.command("canonical-height")
@map_option
@point_option
@click.option("--tol", type=float, default=None)
@click.pass_obj
@handle_errors
def canonical_height_command(config, map_text, point_text, tol):
    f = _load_map(map_text)
    P = parse_point(point_text, f.ambient)
    digits = _digits(config)
    hhat = canonical_height(
        f,
        P,
        tol=tol or config["heights"]["tolerance"],
        max_iterations=config["heights"]["max_iterations"],
        max_bits=config["heights"]["max_bits"],
    )
    click.echo("hhat = {}".format(format_real(hhat.value, digits)))
    click.echo("error = {}".format(format_real(hhat.error, digits)))
    click.echo("rigorous = {}".format("yes" if hhat.rigorous else "no"))


@root.command("neron-tate")
@click.option("--curve", "curve_text", required=True, help='"E: a b"')
@click.option("--point", "point_text", required=True, help='"(3, 5)"')
@click.pass_obj
@handle_errors
def neron_tate_command(config, curve_text, point_text):
    """Neron-Tate height of a rational point, via the Lattes map."""
    curve = EllipticCurve.parse(curve_text)
    P = parse_ell_point(curve, point_text)
    settings = config["neron_tate"]
    hhat = neron_tate(
        curve, P, tol=settings["tolerance"], max_bits=settings["max_bits"]
    )
    digits = _digits(config)
    click.echo(
        "hhat = {} +- {}".format(
            format_real(hhat.value, digits), format_real(hhat.error, digits)
        )
    )


@root.command("orbit")
@map_option
@point_option
@click.option("--max-steps", type=int, default=None)
@out_option
@click.pass_obj
@handle_errors
def orbit(config, map_text, point_text, max_steps, out):
    f = _load_map(map_text)
    P = parse_point(point_text, f.ambient)
    record = orbit_of(
        f,
        P,
        max_steps=max_steps or config["search"]["max_steps"],
        max_bits=config["heights"]["max_bits"],
    )
    _emit_csv(out, "orbit", orbit_rows(str(f), record, _digits(config)))


@root.command("classify")
@map_option
@point_option
@click.pass_obj
@handle_errors
def classify(config, map_text, point_text):
    """Preperiodic / MaxDegree / Unknown for polarized maps and products."""
    f = _load_map(map_text)
    P = parse_point(point_text, f.ambient)
    max_steps = config["search"]["max_steps"]
    margin = config["search"]["escape_margin"]
    if f.is_single:
        click.echo(str(classify_point_polarized(f, P, max_steps, margin)))
        return
    product = classify_product_point(f, P, max_steps, margin)
    click.echo(" x ".join(str(label) for label in product.factors))
    if product.alpha is not None:
        click.echo("alpha = {}".format(format_real(product.alpha, _digits(config))))
        click.echo("in Z_f = {}".format("yes" if product.in_zf else "no"))


@root.command("dyn-degree")
@click.option("--map", "map_text", default=None)
@click.option("--polarization", type=int, default=None)
@click.option("--curve", "curve_text", default=None, help='"E: a b"')
@click.option("--matrix", "matrix_text", default=None, help='"1,1;1,0"')
@click.pass_obj
@handle_errors
def dyn_degree_command(config, map_text, polarization, curve_text, matrix_text):
    """First dynamical degree of a map or of a matrix endomorphism of E^g."""
    if matrix_text is not None:
        if curve_text is None:
            raise click.UsageError("--matrix needs --curve")
        f = MatrixEndo(EllipticCurve.parse(curve_text), parse_matrix(matrix_text))
    elif map_text is not None:
        f = parse_map(map_text, polarization=polarization)
    else:
        raise click.UsageError("give --map or --curve/--matrix")
    degree = dyn_degree(f, config["degrees"]["spectral_eps"])
    digits = _digits(config)
    click.echo(
        "delta = {} +- {} ({})".format(
            format_real(degree.value, digits),
            format_real(degree.error, digits),
            degree.source,
        )
    )


@root.command("arith-degree")
@map_option
@point_option
@click.option("--n-max", type=int, default=None)
@click.option("--combine", type=click.Choice(["sum", "max"]), default="sum")
@out_option
@click.pass_obj
@handle_errors
def arith_degree(config, map_text, point_text, n_max, combine, out):
    f = _load_map(map_text)
    P = parse_point(point_text, f.ambient)
    estimate = arith_degree_estimate(
        f,
        P,
        n_max=n_max or config["degrees"]["n_max"],
        combine=combine,
        max_bits=config["heights"]["max_bits"],
        max_steps=config["search"]["max_steps"],
        escape_margin=config["search"]["escape_margin"],
    )
    logger.info(
        "alpha({}) = {:.6g} [{}], {} exact steps".format(
            P, estimate.estimate, estimate.verdict, estimate.exact_steps
        )
    )
    _emit_csv(out, "arith-degree", arith_degree_rows(str(f), estimate, _digits(config)))


@root.command("zfd")
@map_option
@click.option("--d", "d", type=click.IntRange(1, 2), default=1, show_default=True)
@click.option("--B", "bound", required=True, help='Height bound, e.g. "log100".')
@out_option
@click.option("--summary", default=None, help="Write the text summary here.")
@click.pass_obj
@handle_errors
def zfd(config, map_text, d, bound, out, summary):
    """Certified preperiodic points of height <= B and degree <= d."""
    f = _load_map(map_text)
    report = zf_d_search(
        f,
        d,
        parse_bound(bound),
        max_steps=config["search"]["max_steps"],
        escape_margin=config["search"]["escape_margin"],
        max_candidates=config["search"]["max_candidates"],
        workers=config["workers"],
    )
    digits = _digits(config)
    _emit_csv(out, "zfd", zfd_rows(report, digits))
    lines = zfd_summary(report, digits)
    if summary is not None:
        with click.open_file(summary, "w") as stream:
            stream.write("\n".join(lines) + "\n")
    else:
        for line in lines:
            click.echo(line, err=True)


@root.command("family-ubc")
@click.option("--family", required=True, help='Affine family, e.g. "x^2+c".')
@click.option("--parameter", default="c", show_default=True)
@click.option("--c", "values", default=None, help='"-2..1" or "0,-1,1/2".')
@click.option("--grid", type=int, default=None, help="All p/q with |p|, q <= N.")
@click.option("--d", "d", type=click.IntRange(1, 2), default=1, show_default=True)
@click.option("--B", "bound", required=True)
@out_option
@click.pass_obj
@handle_errors
def family_ubc(config, family, parameter, values, grid, d, bound, out):
    """Preperiodic counts over a one-parameter family."""
    if (values is None) == (grid is None):
        raise click.UsageError("give exactly one of --c or --grid")
    params = parse_range(values) if values is not None else parameter_grid(grid)
    report = family_ubc_experiment(
        family,
        params,
        d,
        parse_bound(bound),
        parameter=parameter,
        max_steps=config["search"]["max_steps"],
        escape_margin=config["search"]["escape_margin"],
        max_candidates=config["search"]["max_candidates"],
        workers=config["workers"],
    )
    _emit_csv(out, "family", family_rows(report, _digits(config)))
    click.echo("max count = {}".format(report.maximum), err=True)
    click.echo(
        "histogram = {}".format(
            ", ".join("{}:{}".format(k, v) for k, v in report.histogram.items())
        ),
        err=True,
    )


@root.command("ell-torsion")
@click.option("--curve", "curves", multiple=True, help='"E: a b"; repeatable.')
@click.option("--a", "a_range", default=None, help='Range of a, e.g. "-10..10".')
@click.option("--b", "b_range", default=None, help="Range of b.")
@click.option("--ceiling", type=int, default=None)
@out_option
@click.pass_obj
@handle_errors
def ell_torsion(config, curves, a_range, b_range, ceiling, out):
    """Rational torsion orders over a list or grid of curves."""
    family = [(c.a, c.b) for c in map(EllipticCurve.parse, curves)]
    if a_range is not None or b_range is not None:
        a_values = parse_range(a_range or "0")
        b_values = parse_range(b_range or "0")
        family.extend(
            (int(a), int(b)) for a, b in itertools.product(a_values, b_values)
        )
    if not family:
        raise click.UsageError("give --curve or --a/--b ranges")
    report = torsion_count_ubc(
        family,
        ceiling=ceiling or config["ubc"]["torsion_ceiling"],
        workers=config["workers"],
    )
    _emit_csv(out, "torsion", torsion_rows(report))
    click.echo(
        "max order = {} at {}".format(
            report.maximum, ", ".join(str(k) for k in report.argmax)
        ),
        err=True,
    )


@root.command("abelian-check")
@click.option("--curve", "curve_text", required=True, help='"E: a b"')
@click.option("--matrix", "matrix_text", required=True, help='"2,0;0,3"')
@click.option("--generator", "generator_texts", multiple=True, help='"(3, 5)"')
@click.option("--translation", "translation_texts", multiple=True)
@click.option("--B", "bound", default=None)
@click.option("--lattes/--no-lattes", default=False, help="Also check x o [2] = L o x.")
@click.pass_obj
@handle_errors
def abelian_check(
    config, curve_text, matrix_text, generator_texts, translation_texts, bound, lattes
):
    """Cross-validate delta = rho(M)^2 and check the low-alpha locus."""
    curve = EllipticCurve.parse(curve_text)
    generators = [parse_ell_point(curve, t) for t in generator_texts]
    translation = tuple(parse_ell_point(curve, t) for t in translation_texts)
    F = MatrixEndo(curve, parse_matrix(matrix_text), translation)
    settings = config["abelian"]
    digits = _digits(config)
    delta = dyn_degree(F, config["degrees"]["spectral_eps"])
    click.echo("delta = {}".format(format_real(delta.value, digits)))

    if delta.value <= 1:
        logger.warning("delta = 1: no height growth to cross-validate")
    else:
        growth = cross_validate_degree(
            F,
            generators,
            iterations=settings["cross_validation_iterations"],
            tolerance=settings["cross_validation_tolerance"],
        )
        click.echo("growth = {}".format(format_real(growth, digits)))
        report = zf_structure_check(
            F,
            generators,
            B=None if bound is None else parse_bound(bound),
            n_max=settings["n_max"],
            probe_radius=settings["probe_radius"],
            alpha_tolerance=settings["alpha_tolerance"],
            torsion_ceiling=settings["torsion_ceiling"],
            cross_validation_tolerance=settings["cross_validation_tolerance"],
            cross_validation_iterations=settings["cross_validation_iterations"],
        )
        click.echo("locus dimension = {}".format(report.locus.dimension))
        click.echo("probes = {}".format(len(report.probes)))
        click.echo("low = {}".format(len(report.low_points)))
        click.echo("violations = {}".format(len(report.violations)))
        if report.violations:
            raise InvariantViolation(
                "{} probes contradict the predicted locus".format(
                    len(report.violations)
                )
            )

    if lattes:
        samples = list(generators) + torsion_subgroup(curve, settings["torsion_ceiling"])
        equivariance = equivariance_check(curve, samples, settings["torsion_ceiling"])
        click.echo("equivariance = {}".format("ok" if equivariance.ok else "FAILED"))
        if not equivariance.ok:
            raise InvariantViolation("x o [2] = L o x fails")


@root.command("verify")
@click.argument("paths", nargs=-1, required=True, type=click.Path(exists=True))
@handle_errors
def verify(paths):
    """Re-check every certified row of zfd/orbit/family/torsion reports."""
    failures = 0
    for path in paths:
        result = verify_report(path)
        click.echo("{}: {} {} rows, {} failures".format(
            path, result.checked, result.kind, len(result.failures)
        ))
        failures += len(result.failures)
    if failures:
        raise InvariantViolation("{} rows failed verification".format(failures))


def main():
    root()


if __name__ == "__main__":
    main()
