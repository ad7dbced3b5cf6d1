"""
Exact-arithmetic engine for Heckman-Opdam polynomials and Dunkl kernels.

Computes non-symmetric Heckman-Opdam polynomials on crystallographic root
systems, Dunkl's intertwining operator, the Dunkl kernel and the discrete
measures through which the former converge to the latter.
"""

from .version import __version__
from .common import (
    Parameters,
    RunConfig,
    printout,
    parallel_warn,
    HodunklError,
    ConfigurationError,
    ResourceLimitError,
    InvariantViolation,
    SpectralDegeneracyError,
    CacheIntegrityError,
)
from .algebra import ComplexPoint, MultiPoly, TrigPoly, eval_trig
from .rootsystems import (
    Multiplicity,
    RootSystem,
    build_root_system,
    root_system_from_code,
)
from .cherednik import EPoly, EPolyCache, HeckmanOpdam, compute_E
from .dunkl import (
    DunklIntertwiner,
    KernelSeries,
    bessel_JW,
    expw_truncated,
    kernel_series,
    v_moment,
)
from .limits import (
    ConvergenceTable,
    DiscreteMeasure,
    measure_approx,
    scaling_error_table,
    symmetric_error_table,
)
from .rankone import bessel_j, closed_E, gegenbauer_Q, hyp2f1
