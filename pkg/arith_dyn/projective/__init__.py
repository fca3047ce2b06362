# flake8: noqa

from .point import Ambient
from .point import P1
from .point import ProjPoint
from .point import point_canonicalize
from .point import point_height
from .point import galois_conjugate
from .point import integral_block
from .point import integral_height
from .point import block_height

from .endomorphism import PolyEndo
from .endomorphism import block_symbols
from .endomorphism import evaluate
from .endomorphism import parse_map
from .endomorphism import from_affine

from .resultant import binary_resultant
from .resultant import cofactor_bound
from .resultant import morphism_check
from .resultant import sylvester_matrix

from .iteration import PointIterator
from .iteration import normalize_integral
