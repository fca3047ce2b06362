# flake8: noqa

from .rational import rat_normalize
from .rational import as_rat

from .quadratic import QuadExt
from .quadratic import quad_reduce
from .quadratic import sqrt_rat
from .quadratic import squarefree_decomposition
from .quadratic import field_of
from .quadratic import conjugate
from .quadratic import alg_key
from .quadratic import bit_size

from .polynomial import IntPoly
from .polynomial import min_poly

from .height import HeightValue
from .height import LOG_ERROR
from .height import log_error
from .height import abs_height_alg
from .height import log_int

from .parse import parse_algnum
