"""Cherednik operators and non-symmetric Heckman-Opdam polynomials."""

from .cache import EPolyCache, epoly_cache_key
from .heckman_opdam import EPoly, HeckmanOpdam, compute_E
from .operators import apply_cherednik, cherednik_on_exponential
