import functools

from arith_dyn.projective import P1
from arith_dyn.projective import PolyEndo
from arith_dyn.projective import block_symbols


@functools.lru_cache(maxsize=128)
def lattes_map(curve):
    """Degree-4 map L on P^1 with x([2]P) = L(x(P)).

    L = (X^4 - 2aX^2Z^2 - 8bXZ^3 + a^2Z^4 : 4Z(X^3 + aXZ^2 + bZ^3)).
    """
    X, Z = block_symbols(1)
    a, b = curve.a, curve.b
    num = X ** 4 - 2 * a * X ** 2 * Z ** 2 - 8 * b * X * Z ** 3 + a ** 2 * Z ** 4
    den = 4 * Z * (X ** 3 + a * X * Z ** 2 + b * Z ** 3)
    return PolyEndo.from_exprs(P1, [[num, den]], declared_polarization=4)
