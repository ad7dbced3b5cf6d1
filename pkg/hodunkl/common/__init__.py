"""General functions for hodunkl, such as parameters."""

from .parameters import Parameters, RunConfig
from .parallelizer import printout, parallel_warn, parallel_map
from .exceptions import (
    HodunklError,
    ConfigurationError,
    ResourceLimitError,
    InvariantViolation,
    SpectralDegeneracyError,
    CacheIntegrityError,
)
