import functools

import sympy

from arith_dyn.exceptions import NotAMorphism
from arith_dyn.exceptions import Unverified
from arith_dyn.logger import logger
from arith_dyn.projective.endomorphism import block_symbols


def binary_coefficients(poly, r):
    """[c_0, ..., c_r] with poly = sum c_i x^(r-i) y^i."""
    coeffs = [0] * (r + 1)
    for (ex, ey), c in poly.terms():
        coeffs[ey] = int(c)
    return coeffs


def sylvester_matrix(F0, F1, r):
    """2r x 2r Sylvester matrix of two binary forms of degree r.

    Rows 0..r-1 hold shifts of F0, rows r..2r-1 shifts of F1, so that
    u^T S is the coefficient vector of G0*F0 + G1*F1 for cofactors of
    degree r - 1 with coefficient vector u = (G0, G1).
    """
    a = binary_coefficients(F0, r)
    b = binary_coefficients(F1, r)
    size = 2 * r
    S = sympy.zeros(size, size)
    for j in range(r):
        for i, c in enumerate(a):
            S[j, j + i] = c
        for i, c in enumerate(b):
            S[r + j, j + i] = c
    return S


@functools.lru_cache(maxsize=256)
def binary_resultant(f, i=0):
    """Exact resultant (Sylvester determinant) of a P^1 block."""
    F0, F1 = f.blocks[i]
    r = f.degrees[i]
    return int(sylvester_matrix(F0, F1, r).det(method="bareiss"))


@functools.lru_cache(maxsize=256)
def cofactor_bound(f, i=0):
    """(R, Gamma) for a P^1 block.

    Integral cofactors with G0 F0 + G1 F1 = R x^(2r-1), and another pair
    giving R y^(2r-1), exist; Gamma is the larger l1-norm of the two
    cofactor coefficient vectors. At a coprime integer pair with
    M = max(|x|, |y|):

        |R| M^(2r-1) <= Gamma M^(r-1) max(|F0|, |F1|)

    and gcd(F0, F1) divides R, so the reduced image has
    max >= M^r / Gamma, i.e. h(f(P)) >= r h(P) - log Gamma.
    """
    F0, F1 = f.blocks[i]
    r = f.degrees[i]
    S = sylvester_matrix(F0, F1, r)
    R = int(S.det(method="bareiss"))
    if R == 0:
        raise NotAMorphism("resultant of {} vanishes".format(f))
    size = 2 * r
    gamma = 0
    for k in (0, size - 1):
        rhs = sympy.zeros(size, 1)
        rhs[k, 0] = R
        u = S.T.LUsolve(rhs)
        gamma = max(gamma, sum(abs(sympy.Rational(v)) for v in u))
    return R, sympy.Rational(gamma)


def _check_block(f, i):
    n = f.ambient.factors[i]
    block = [p for p in f.blocks[i]]
    if any(p.is_zero for p in block):
        # the remaining n polynomials always share a projective zero
        return False
    if n == 1:
        return binary_resultant(f, i) != 0
    if n == 2:
        gens = block_symbols(2)
        basis = sympy.groebner(
            [p.as_expr() for p in block], *gens, order="grevlex"
        )
        # common zeros beyond the origin would make the affine cone positive
        # dimensional, so the ideal is zero dimensional exactly when f is
        # well defined
        return basis.is_zero_dimensional
    raise Unverified(
        "well-definedness on P^{} is not decided; assert it explicitly".format(n)
    )


def morphism_check(f):
    """True iff no block has a common projective zero over the closure.

    P^1 blocks use the Sylvester resultant, P^2 blocks a Groebner basis
    of (F0, F1, F2); blocks on P^3 or larger raise Unverified.
    """
    for i in range(len(f.blocks)):
        if not _check_block(f, i):
            logger.debug("block {} of {} has a common zero".format(i, f))
            return False
    return True
