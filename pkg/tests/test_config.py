import os.path as osp

import pytest

from arith_dyn.config import get_config
from arith_dyn.config import get_default_config
from arith_dyn.exceptions import ConfigError


def test_default_config_is_copied(isolated_home):
    config = get_default_config()
    assert config["abelian"]["torsion_ceiling"] == 12
    assert config["ubc"]["torsion_ceiling"] == 16
    assert config["output"]["significant_digits"] == 12
    assert osp.exists(osp.join(str(isolated_home), ".arith_dynrc"))


def test_inline_yaml_and_args_layering():
    config = get_config("search: {max_steps: 32}", {"workers": 3})
    assert config["search"]["max_steps"] == 32
    assert config["search"]["max_candidates"] == 5000000
    assert config["workers"] == 3


def test_user_rc_overrides_defaults(isolated_home):
    rc = isolated_home / ".arith_dynrc"
    rc.write_text("degrees:\n  n_max: 8\n")
    config = get_config("degrees: {spectral_eps: 1.0e-10}")
    assert config["degrees"]["n_max"] == 8
    assert config["degrees"]["spectral_eps"] == 1.0e-10


def test_config_file(tmp_path):
    path = tmp_path / "experiment.yaml"
    path.write_text("heights:\n  tolerance: 1.0e-6\nlogging:\n  level: DEBUG\n")
    config = get_config(str(path))
    assert config["heights"]["tolerance"] == 1.0e-6
    assert config["logging"]["level"] == "DEBUG"


@pytest.mark.parametrize(
    "override",
    [
        {"unknown": 1},
        {"heights": {"tolerance": -1.0}},
        {"workers": 0},
        {"search": {"max_steps": "many"}},
        {"search": 5},
        {"logging": {"level": "LOUD"}},
    ],
)
def test_invalid_values_rejected(override):
    with pytest.raises(ConfigError):
        get_config(None, override)
