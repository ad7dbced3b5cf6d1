"""Dunkl operators, the intertwining operator and the Dunkl kernel."""

from .intertwiner import DunklIntertwiner, IntertwinerStage
from .kernel import (
    KernelSeries,
    bessel_JW,
    expw_truncated,
    homogeneous_term,
    kernel_series,
    kernel_symmetry_defect,
    v_moment,
)
from .operators import apply_dunkl
