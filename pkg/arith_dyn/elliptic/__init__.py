# flake8: noqa

from .curve import EllipticCurve
from .curve import EllPoint
from .curve import O
from .curve import ell_point
from .curve import parse_ell_point
from .curve import ell_neg
from .curve import ell_add
from .curve import ell_mul
from .curve import ell_order
from .curve import x_projection

from .lattes import lattes_map

from .torsion import TorsionCountReport
from .torsion import TorsionStructure
from .torsion import torsion_candidates
from .torsion import torsion_subgroup
from .torsion import torsion_structure
from .torsion import torsion_count_ubc
