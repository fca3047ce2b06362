# flake8: noqa

from .text import parse_bound
from .text import parse_point
from .text import parse_range
from .text import format_real
