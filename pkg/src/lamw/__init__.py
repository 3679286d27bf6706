"""Lambert W0 through the Nuttall-Bouwkamp integral representation."""
from .explorer import GridCell, GridSpec, classify_point, status_grid, sweep, write_csv
from .lambert import (
    BRANCH_POINT,
    ConvergenceError,
    NBCheckRecord,
    SingularIntegrandError,
    nb_check,
    nb_lhs,
    nb_rhs,
    omega,
    series_coefficient,
    series_integral_consistency,
    w0_halley,
    w0_integral,
    w0_series,
)
from .quadrature import Interval, QuadResult, integrate
from .special import DomainError, KernelPoint, ToleranceConfig, kernel, kernel_power, log_gamma

__version__ = "0.1.0"
