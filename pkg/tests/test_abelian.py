import math

import numpy as np
import pytest
import sympy

from arith_dyn.abelian import MatrixEndo
from arith_dyn.abelian import cross_validate_degree
from arith_dyn.abelian import equivariance_check
from arith_dyn.abelian import height_pairing
from arith_dyn.abelian import invariant_locus
from arith_dyn.abelian import matrix_endo_apply
from arith_dyn.abelian import matrix_endo_dyn_degree
from arith_dyn.abelian import parse_matrix
from arith_dyn.abelian import quadratic_witness
from arith_dyn.abelian import zf_structure_check
from arith_dyn.degrees import DegreeSource
from arith_dyn.degrees import dyn_degree
from arith_dyn.elliptic import EllipticCurve
from arith_dyn.elliptic import O
from arith_dyn.elliptic import ell_add
from arith_dyn.elliptic import ell_mul
from arith_dyn.elliptic import ell_point
from arith_dyn.elliptic import torsion_subgroup
from arith_dyn.exceptions import InsufficientGenerators
from arith_dyn.exceptions import ParseError
from arith_dyn.exceptions import Unsupported
from arith_dyn.heights import neron_tate


GOLDEN = (1 + math.sqrt(5)) / 2


def test_parse_matrix():
    assert parse_matrix("2,0;0,3") == ((2, 0), (0, 3))
    assert parse_matrix("[[1,1],[1,0]]") == ((1, 1), (1, 0))
    assert parse_matrix("2") == ((2,),)
    with pytest.raises(ParseError):
        parse_matrix("1,2;3")
    with pytest.raises(ParseError):
        parse_matrix("a,b;c,d")


def test_matrix_endo_validation(mordell_curve):
    with pytest.raises(ValueError):
        MatrixEndo(mordell_curve, ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        MatrixEndo(mordell_curve, ((1, 0),))


def test_matrix_endo_apply(mordell_curve, mordell_generator):
    curve = mordell_curve
    P = mordell_generator
    Q = ell_mul(curve, 2, P)
    identity = MatrixEndo(curve, ((1, 0), (0, 1)))
    assert matrix_endo_apply(identity, (P, Q)) == (P, Q)

    diagonal = MatrixEndo(curve, ((2, 0), (0, 3)))
    assert diagonal.apply((P, Q)) == (ell_mul(curve, 2, P), ell_mul(curve, 3, Q))

    shear = MatrixEndo(curve, ((1, 1), (0, 1)))
    assert shear.apply((P, Q)) == (ell_add(curve, P, Q), Q)


def test_translation_is_applied():
    curve = EllipticCurve(0, 1)
    T = ell_point(curve, -1, 0)
    F = MatrixEndo(curve, ((1,),), (T,))
    assert F.apply((O,)) == (T,)
    assert F.apply((T,)) == (O,)


@pytest.mark.parametrize(
    "matrix,expected",
    [
        (((2,),), 4.0),
        (((2, 0), (0, 3)), 9.0),
        (((1, 1), (1, 0)), GOLDEN ** 2),
    ],
)
def test_matrix_endo_dyn_degree(mordell_curve, matrix, expected):
    F = MatrixEndo(mordell_curve, matrix)
    delta = matrix_endo_dyn_degree(F)
    assert delta.value == pytest.approx(expected, abs=1e-10)
    assert delta.source is DegreeSource.SPECTRAL_RADIUS
    assert dyn_degree(F).value == delta.value


def test_height_pairing_is_positive(mordell_curve, mordell_generator):
    H = height_pairing(mordell_curve, [mordell_generator])
    assert H.shape == (1, 1)
    assert H[0, 0] > 0
    double = ell_mul(mordell_curve, 2, mordell_generator)
    H2 = height_pairing(mordell_curve, [mordell_generator, double])
    # <P, 2P> = 2 <P, P>
    np.testing.assert_allclose(H2[0, 1], 2 * H2[0, 0], rtol=1e-2)


@pytest.mark.parametrize(
    "matrix",
    [((2,),), ((2, 0), (0, 3)), ((1, 1), (1, 0))],
)
def test_cross_validation(mordell_curve, mordell_generator, matrix):
    F = MatrixEndo(mordell_curve, matrix)
    growth = cross_validate_degree(F, [mordell_generator])
    assert growth == pytest.approx(matrix_endo_dyn_degree(F).value, rel=1e-2)


def test_cross_validation_rejects_torsion_generator():
    torsion_curve = EllipticCurve(0, 1)
    G = MatrixEndo(torsion_curve, ((2,),))
    with pytest.raises(InsufficientGenerators):
        cross_validate_degree(G, [ell_point(torsion_curve, 2, 3)])


def test_quadratic_witness_on_rank_zero_curve():
    # y^2 = x^3 + 1 has rank 0 and torsion Z/6
    curve = EllipticCurve(0, 1)
    P = quadratic_witness(curve)
    assert curve.contains(P)
    assert P.x.denominator == 1
    assert neron_tate(curve, P).value > 0.01


def test_cross_validation_without_generators():
    F = MatrixEndo(EllipticCurve(0, 1), ((2,),))
    growth = cross_validate_degree(F, [])
    assert growth == pytest.approx(4.0, rel=1e-2)

def test_invariant_locus_diagonal(mordell_curve):
    F = MatrixEndo(mordell_curve, ((2, 0), (0, 3)))
    locus = invariant_locus(F)
    assert locus.dimension == 1
    assert locus.is_invariant()
    assert locus.contains([[5], [0]])
    assert not locus.contains([[0], [1]])


def test_invariant_locus_multiplication(mordell_curve):
    locus = invariant_locus(MatrixEndo(mordell_curve, ((2,),)))
    assert locus.dimension == 0
    assert locus.contains(sympy.zeros(1, 1))
    assert not locus.contains([[1]])


def test_structure_check_multiplication(mordell_curve, mordell_generator):
    F = MatrixEndo(mordell_curve, ((2,),))
    report = zf_structure_check(F, [mordell_generator])
    assert report.delta == pytest.approx(4.0)
    assert not report.violations
    assert [p.coefficients for p in report.low_points] == [((0,),)]
    for probe in report.probes:
        assert probe.alpha <= report.delta


def test_structure_check_diagonal(mordell_curve, mordell_generator):
    F = MatrixEndo(mordell_curve, ((2, 0), (0, 3)))
    report = zf_structure_check(F, [mordell_generator], probe_radius=1)
    assert not report.violations
    low = {p.coefficients for p in report.low_points}
    assert low == {((c,), (0,)) for c in (-1, 0, 1)}


def test_structure_check_torsion_translation_invariant():
    # y^2 = x^3 - 25x: rank one, torsion Z/2 x Z/2
    curve = EllipticCurve(-25, 0)
    G = ell_point(curve, -4, 6)
    T = ell_point(curve, 5, 0)
    assert T in torsion_subgroup(curve)
    F = MatrixEndo(curve, ((2,),))
    plain = zf_structure_check(F, [G], probe_radius=1)
    shifted = zf_structure_check(F, [G], probe_radius=1, torsion_shift=(T,))
    assert [p.low for p in plain.probes] == [p.low for p in shifted.probes]
    assert not shifted.violations


def test_structure_check_guards(mordell_curve, mordell_generator):
    with pytest.raises(Unsupported):
        zf_structure_check(MatrixEndo(mordell_curve, ((1,),)), [mordell_generator])
    with pytest.raises(Unsupported):
        zf_structure_check(
            MatrixEndo(mordell_curve, ((2,),)), [mordell_generator], d=2
        )


def test_lattes_equivariance():
    curve = EllipticCurve(-25, 0)
    samples = [ell_point(curve, -4, 6)] + torsion_subgroup(curve)
    report = equivariance_check(curve, samples)
    assert report.ok
    assert [row.torsion for row in report.rows] == [False] + [True] * (
        len(samples) - 1
    )


def test_structure_check_rank_zero_low_set_is_torsion():
    curve = EllipticCurve(0, 1)
    torsion = torsion_subgroup(curve)
    assert len(torsion) == 6
    report = zf_structure_check(MatrixEndo(curve, ((2,),)), [])
    assert report.delta == pytest.approx(4.0)
    assert report.growth == pytest.approx(4.0, rel=1e-2)
    assert not report.violations
    assert len(report.probes) == 6
    assert {p.points[0] for p in report.low_points} == set(torsion)
