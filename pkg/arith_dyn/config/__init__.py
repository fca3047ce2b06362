import os.path as osp
import shutil

import yaml

from arith_dyn.exceptions import ConfigError
from arith_dyn.logger import logger


here = osp.dirname(osp.abspath(__file__))

POSITIVE_KEYS = {
    "workers",
    "tolerance",
    "max_iterations",
    "max_bits",
    "n_max",
    "spectral_eps",
    "max_steps",
    "max_candidates",
    "torsion_ceiling",
    "probe_radius",
    "alpha_tolerance",
    "cross_validation_tolerance",
    "cross_validation_iterations",
    "significant_digits",
}


def update_dict(target_dict, new_dict, validate_item=None):
    for key, value in new_dict.items():
        if validate_item:
            validate_item(key, value)
        if key not in target_dict:
            raise ConfigError("Unexpected key in config: {}".format(key))
        if isinstance(target_dict[key], dict) and isinstance(value, dict):
            update_dict(target_dict[key], value, validate_item=validate_item)
        elif isinstance(target_dict[key], dict):
            raise ConfigError("Config key {} must be a mapping".format(key))
        else:
            target_dict[key] = value


def get_user_config_file():
    return osp.join(osp.expanduser("~"), ".arith_dynrc")


def get_default_config():
    config_file = osp.join(here, "default_config.yaml")
    with open(config_file) as f:
        config = yaml.safe_load(f)

    # save default config to ~/.arith_dynrc
    user_config_file = get_user_config_file()
    if not osp.exists(user_config_file):
        try:
            shutil.copy(config_file, user_config_file)
        except Exception:
            logger.warning("Failed to save config: {}".format(user_config_file))

    return config


def validate_config_item(key, value):
    if key == "level":
        if str(value).upper() not in (
            "DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"
        ):
            raise ConfigError("Unknown log level: {}".format(value))
    elif key in POSITIVE_KEYS:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError("{} must be a number, got {!r}".format(key, value))
        if value <= 0:
            raise ConfigError("{} must be positive, got {}".format(key, value))
    elif key == "escape_margin":
        if not isinstance(value, (int, float)) or value < 0:
            raise ConfigError("escape_margin must be >= 0")


def get_config(config_file_or_yaml=None, config_from_args=None):
    # 1. default config
    config = get_default_config()

    # 1b. user overrides in ~/.arith_dynrc
    user_config_file = get_user_config_file()
    if osp.exists(user_config_file):
        with open(user_config_file) as f:
            config_from_user = yaml.safe_load(f)
        if config_from_user:
            update_dict(
                config, config_from_user, validate_item=validate_config_item
            )

    # 2. specified as file or yaml
    if config_file_or_yaml is not None:
        config_from_yaml = yaml.safe_load(config_file_or_yaml)
        if not isinstance(config_from_yaml, dict):
            with open(config_from_yaml) as f:
                logger.info(
                    "Loading config file from: {}".format(config_from_yaml)
                )
                config_from_yaml = yaml.safe_load(f)
        if config_from_yaml:
            update_dict(
                config, config_from_yaml, validate_item=validate_config_item
            )

    # 3. command line argument or specified config file
    if config_from_args is not None:
        update_dict(
            config, config_from_args, validate_item=validate_config_item
        )

    return config
