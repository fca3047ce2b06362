# flake8: noqa

from .bounds import TransformBound
from .bounds import height_difference_bound

from .canonical import canonical_height

from .neron_tate import neron_tate
