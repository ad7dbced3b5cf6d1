"""Discrete measures and scaling limits of E_lambda and F."""

from .measure import (
    DiscreteMeasure,
    measure_approx,
    measure_integrate,
    measure_moment,
    support_check,
)
from .convergence import (
    ConvergenceTable,
    kernel_bound_check,
    moment_convergence,
    scaling_error_table,
    symmetric_error_table,
)
