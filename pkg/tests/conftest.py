import pytest

from arith_dyn.elliptic import EllipticCurve
from arith_dyn.elliptic import ell_point
from arith_dyn.projective import parse_map


@pytest.fixture(autouse=True)
def isolated_home(tmp_path, monkeypatch):
    # get_default_config copies the packaged YAML to ~/.arith_dynrc
    monkeypatch.setenv("HOME", str(tmp_path))
    monkeypatch.setenv("USERPROFILE", str(tmp_path))
    return tmp_path


@pytest.fixture
def square_map():
    return parse_map("P1:[x^2, y^2]")


@pytest.fixture
def basilica_map():
    """x^2 - 1."""
    return parse_map("P1:[x^2 - y^2, y^2]")


@pytest.fixture
def chebyshev_map():
    """x^2 - 2."""
    return parse_map("P1:[x^2 - 2*y^2, y^2]")


@pytest.fixture
def mordell_curve():
    """y^2 = x^3 - 2, rank one with generator (3, 5) and no torsion."""
    return EllipticCurve(0, -2)


@pytest.fixture
def mordell_generator(mordell_curve):
    return ell_point(mordell_curve, 3, 5)
