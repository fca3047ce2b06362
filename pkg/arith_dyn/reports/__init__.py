# flake8: noqa

from .csv_io import HEADERS
from .csv_io import report_kind
from .csv_io import write_rows
from .csv_io import zfd_rows
from .csv_io import zfd_summary
from .csv_io import orbit_rows
from .csv_io import family_rows
from .csv_io import torsion_rows
from .csv_io import arith_degree_rows

from .verify import VerifyReport
from .verify import verify_report
