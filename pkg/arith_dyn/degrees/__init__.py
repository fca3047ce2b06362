# flake8: noqa

from .spectral import SpectralRadius
from .spectral import spectral_radius
from .spectral import modulus_resultant
from .spectral import max_root_modulus

from .dynamical import DegreeSource
from .dynamical import DynDegree
from .dynamical import Iterate
from .dynamical import dyn_degree

from .arithmetic import ArithDegreeEstimate
from .arithmetic import Classification
from .arithmetic import ProductClassification
from .arithmetic import Verdict
from .arithmetic import arith_degree_estimate
from .arithmetic import classify_point_polarized
from .arithmetic import classify_product_point
from .arithmetic import height_trace
