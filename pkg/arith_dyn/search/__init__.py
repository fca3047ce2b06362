# flake8: noqa

from .orbit import OrbitRecord
from .orbit import OrbitStatus
from .orbit import PreperiodicCertificate
from .orbit import orbit
from .orbit import is_preperiodic
from .orbit import escape_threshold
from .orbit import verify_orbit_row

from .enumerate import enumerate_points
from .enumerate import integral_points
from .enumerate import quadratic_points

from .zfd import Finding
from .zfd import SearchReport
from .zfd import zf_d_search

from .family import FamilyReport
from .family import family_ubc_experiment
from .family import parameter_grid
