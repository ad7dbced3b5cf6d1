"""Comparison of the A_1 engine output with the closed rank-one formulas."""

from fractions import Fraction

from hodunkl.common.exceptions import ConfigurationError
from hodunkl.limits.convergence import ConvergenceTable
from hodunkl.rankone.special_functions import (
    closed_E_trig,
    closed_F,
    gegenbauer_bessel_limit,
)


def _rank_one_multiplicity(solver):
    R = solver.root_system
    if R.code != "A1":
        raise ConfigurationError(
            "Rank-one oracles need A1, got " + R.code + "."
        )
    return solver.multiplicity.value(R.simple_roots[0])


def line_to_point(t):
    """Map the real coordinate t of the line to simple-root coordinates."""
    if isinstance(t, (int, Fraction)):
        return (Fraction(t) / 2,)
    return (t / 2,)


def e_oracle_defect(solver, n):
    """
    Return E_n / c_n - G(n~, .) as an exact TrigPoly.

    The zero polynomial means the solver and the closed formula agree.
    """
    k = _rank_one_multiplicity(solver)
    epoly = solver.compute_E((n,))
    return epoly.normalized() - closed_E_trig(n, k)


def f_oracle_table(solver, max_n, z_values):
    """
    Compare F(n + k, z) from the solver with Q_n^k(cosh z).

    Parameters
    ----------
    solver : hodunkl.cherednik.HeckmanOpdam
        Solver for A1.

    max_n : int
        Largest degree n.

    z_values : list of float
        Points on the line.

    Returns
    -------
    table : ConvergenceTable
        One row per (n, z); the n column holds the degree.
    """
    k = _rank_one_multiplicity(solver)
    table = ConvergenceTable("f_oracle")
    for n in range(max_n + 1):
        for t in z_values:
            table.add_row(
                n,
                (t,),
                solver.eval_F((n,), line_to_point(t)),
                closed_F(n, k, t),
            )
    return table


def bessel_limit_table(k, z_values, n_list):
    """Tabulate Q_n^k(cos(z/n)) against j_{k-1/2}(z)."""
    table = ConvergenceTable("gegenbauer_bessel")
    for n in n_list:
        for t in z_values:
            approx, reference, _ = gegenbauer_bessel_limit(k, t, n)
            table.add_row(n, (t,), approx, reference)
    return table
