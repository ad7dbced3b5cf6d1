"""Exact polynomials, trigonometric polynomials and linear algebra."""

from .linear_algebra import (
    invert_exact,
    mat_vec,
    rref_solve,
    solve_exact,
)
from .multipoly import (
    MultiPoly,
    divided_difference,
    monomial_basis,
    reflect_poly,
)
from .trigpoly import ComplexPoint, TrigPoly, eval_trig
