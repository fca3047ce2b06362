from dataclasses import dataclass
import enum

from arith_dyn.degrees.spectral import spectral_radius
from arith_dyn.exceptions import Unresolvable
from arith_dyn.projective import PolyEndo


class DegreeSource(enum.Enum):
    POLARIZED = "Polarized"
    SPECTRAL_RADIUS = "SpectralRadius"
    PRODUCT_RULE = "ProductRule"
    POWER_RULE = "PowerRule"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class DynDegree(object):
    value: float
    error: float
    source: DegreeSource

    def __str__(self):
        return "{:.12g} +- {:.3g} ({})".format(self.value, self.error, self.source)


@dataclass(frozen=True)
class Iterate(object):
    """The n-th iterate of ``base``, kept symbolic for the power rule."""

    base: object
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("iterate count must be >= 1")


def dyn_degree(f, eps=1.0e-14):
    """First dynamical degree.

    Sources in order: declared polarization, NS matrix, single-factor
    degree, product rule over factors; ``Iterate`` uses the power rule
    and anything with a ``dynamical_degree()`` method (matrix
    endomorphisms of E^g) answers for itself.
    """
    if isinstance(f, Iterate):
        base = dyn_degree(f.base, eps)
        value = base.value ** f.n
        error = f.n * base.value ** (f.n - 1) * base.error
        return DynDegree(value, error, DegreeSource.POWER_RULE)

    if hasattr(f, "dynamical_degree"):
        return f.dynamical_degree()

    if not isinstance(f, PolyEndo):
        raise Unresolvable(
            "no dynamical degree source for {!r}; supply an ns_matrix".format(f)
        )
    if f.declared_polarization is not None:
        return DynDegree(float(f.declared_polarization), 0.0, DegreeSource.POLARIZED)
    if f.ns_matrix is not None:
        rho = spectral_radius(f.ns_matrix, eps)
        return DynDegree(rho.value, rho.error, DegreeSource.SPECTRAL_RADIUS)
    if f.is_single:
        return DynDegree(float(f.degree), 0.0, DegreeSource.POLARIZED)

    factors = [dyn_degree(f.factor(i), eps) for i in range(len(f.ambient))]
    top = max(factors, key=lambda d: d.value)
    return DynDegree(top.value, top.error, DegreeSource.PRODUCT_RULE)
