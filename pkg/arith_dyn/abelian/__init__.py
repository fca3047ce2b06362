# flake8: noqa

from .matrix_endo import MatrixEndo
from .matrix_endo import parse_matrix
from .matrix_endo import matrix_endo_apply
from .matrix_endo import matrix_endo_dyn_degree
from .matrix_endo import check_generators
from .matrix_endo import quadratic_witness
from .matrix_endo import height_pairing
from .matrix_endo import coefficient_trace
from .matrix_endo import cross_validate_degree

from .structure import InvariantLocus
from .structure import ProbeResult
from .structure import StructureReport
from .structure import invariant_locus
from .structure import zf_structure_check

from .equivariance import EquivarianceReport
from .equivariance import equivariance_check
