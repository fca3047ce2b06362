# flake8: noqa

from .pool import parallel_map
