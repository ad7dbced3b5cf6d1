"""Scaling limit tables comparing E, F and moments with their limits."""

from fractions import Fraction
import math

import numpy as np
import pandas as pd

from hodunkl.algebra.trigpoly import ComplexPoint, eval_trig
from hodunkl.common.exceptions import ResourceLimitError
from hodunkl.common.json_serializable import JSONSerializable
from hodunkl.common.parallelizer import parallel_map, parallel_warn, printout
from hodunkl.dunkl.kernel import bessel_JW, expw_truncated, v_moment
from hodunkl.limits.measure import measure_approx, measure_moment

CSV_FLOAT_FORMAT = "%.12g"


def _point_label(z):
    if not isinstance(z, ComplexPoint):
        z = ComplexPoint.from_real(z)
    real = ",".join(str(x) for x in z.real)
    if z.is_real():
        return real
    return real + ";" + ",".join(str(x) for x in z.imag)


def _rounded(value):
    # 12 significant digits, None for missing values.
    if value is None or not np.isfinite(value):
        return None
    return float(CSV_FLOAT_FORMAT % value)


class ConvergenceTable(JSONSerializable):
    """
    Rows (n, z, approximation, reference, error) of one scaling experiment.

    Rows that could not be computed (e.g. a downset larger than the
    configured limit) are kept with a status other than "ok" and no values,
    so a run always reports every (n, z) it was asked for.

    Parameters
    ----------
    title : string
        Name of the experiment, e.g. "expw".
    """

    columns = [
        "n",
        "z",
        "approx",
        "approx_imag",
        "reference",
        "reference_imag",
        "error",
        "tail",
        "status",
    ]

    def __init__(self, title=""):
        super(ConvergenceTable, self).__init__()
        self.title = title
        self.rows = []

    def add_row(self, n, z, approx, reference, tail=0.0, status="ok"):
        """
        Append a row.

        Parameters
        ----------
        n : int
            Scaling factor.

        z : ComplexPoint or sequence
            Evaluation point (or moment direction).

        approx, reference : complex or Fraction or None
            Approximation at level n and the limit it is compared with.

        tail : float
            Size of the last kept term of a truncated reference.

        status : string
            "ok", or the reason the row has no values.
        """
        if status != "ok" or approx is None:
            self.rows.append(
                {
                    "n": n,
                    "z": _point_label(z),
                    "approx": None,
                    "approx_imag": None,
                    "reference": None,
                    "reference_imag": None,
                    "error": None,
                    "tail": None,
                    "status": status,
                }
            )
            return
        if isinstance(approx, Fraction) and isinstance(reference, Fraction):
            error = float(abs(approx - reference))
        else:
            error = abs(complex(approx) - complex(reference))
        approx = complex(approx)
        reference = complex(reference)
        self.rows.append(
            {
                "n": n,
                "z": _point_label(z),
                "approx": approx.real,
                "approx_imag": approx.imag,
                "reference": reference.real,
                "reference_imag": reference.imag,
                "error": error,
                "tail": float(tail),
                "status": status,
            }
        )

    def to_dataframe(self):
        """Return the rows as a pandas DataFrame with fixed columns."""
        return pd.DataFrame(self.rows, columns=self.columns)

    def errors(self, z=None):
        """Return {n: error} of the ok rows, optionally for one z only."""
        frame = self.to_dataframe()
        frame = frame[frame["status"] == "ok"]
        if z is not None:
            frame = frame[frame["z"] == _point_label(z)]
        return dict(zip(frame["n"], frame["error"].astype(float)))

    def max_error(self, n):
        """Return the largest error over all z at level n."""
        frame = self.to_dataframe()
        frame = frame[(frame["status"] == "ok") & (frame["n"] == n)]
        if len(frame) == 0:
            return math.nan
        return float(frame["error"].max())

    def to_csv(self, path_or_buf=None):
        """Write the table as CSV, floats with 12 significant digits."""
        return self.to_dataframe().to_csv(
            path_or_buf, index=False, float_format=CSV_FLOAT_FORMAT
        )

    def to_json(self):
        """Return the JSON form, floats rounded to 12 significant digits."""
        return {
            "object": "ConvergenceTable",
            "title": self.title,
            "columns": list(self.columns),
            "rows": [
                {
                    c: (
                        _rounded(row[c])
                        if isinstance(row[c], float)
                        else row[c]
                    )
                    for c in self.columns
                }
                for row in self.rows
            ],
        }

    @classmethod
    def from_json(cls, json_dict):
        """Read a table from its JSON form."""
        table = cls(json_dict.get("title", ""))
        table.rows = [dict(row) for row in json_dict["rows"]]
        return table


def _levels(weight, n_list, workers, compute):
    # Runs compute(n) for every n; resource limits mark the level only.
    def guarded(n):
        try:
            return compute(n)
        except ResourceLimitError as error:
            parallel_warn(
                "Skipping n = " + str(n) + " for " + str(weight) + ": "
                + str(error)
            )
            return None

    return parallel_map(guarded, n_list, workers)


def scaling_error_table(
    solver,
    intertwiner,
    weight,
    z_grid,
    n_list,
    truncation_order,
    workers=1,
):
    """
    Compare E_{n lambda}(z / n) / c_{n lambda} with Exp_W(lambda, z).

    Parameters
    ----------
    solver : hodunkl.cherednik.HeckmanOpdam
        Solver of (R, k).

    intertwiner : hodunkl.dunkl.DunklIntertwiner
        Intertwiner of the same (R, k).

    weight : tuple of int
        Weight lambda.

    z_grid : list
        Evaluation points z.

    n_list : list of int
        Scaling factors.

    truncation_order : int
        Truncation order N of the kernel series.

    workers : int
        Number of threads working on different n.

    Returns
    -------
    table : ConvergenceTable
        One row per (n, z).
    """
    R = solver.root_system
    x = R.weight_to_point(weight)
    references = [
        expw_truncated(intertwiner, x, z, truncation_order) for z in z_grid
    ]

    def compute(n):
        epoly = solver.compute_E(tuple(n * c for c in weight))
        normalization = float(epoly.normalization)
        return [
            eval_trig(
                R, epoly.coefficients, _scaled(z, Fraction(1, n))
            ) / normalization
            for z in z_grid
        ]

    printout("Scaling table for E" + str(tuple(weight)), min_verbosity=1)
    table = ConvergenceTable("expw")
    levels = _levels(weight, n_list, workers, compute)
    for n, values in zip(n_list, levels):
        for i, z in enumerate(z_grid):
            if values is None:
                table.add_row(n, z, None, None, status="resource_limit")
            else:
                reference, tail = references[i]
                table.add_row(n, z, values[i], reference, tail)
    return table


def symmetric_error_table(
    solver,
    intertwiner,
    weight,
    z_grid,
    n_list,
    truncation_order,
    workers=1,
):
    """
    Compare F(n lambda + rho, z / n) with J_W(lambda, z).

    Parameters are those of scaling_error_table; lambda must be dominant.

    Returns
    -------
    table : ConvergenceTable
        One row per (n, z). The tail column is left at zero, J_W being an
        average of truncated kernels.
    """
    R = solver.root_system
    x = R.weight_to_point(weight)
    references = [
        bessel_JW(intertwiner, x, z, truncation_order) for z in z_grid
    ]

    def compute(n):
        scaled_weight = tuple(n * c for c in weight)
        return [
            solver.eval_F(scaled_weight, _scaled(z, Fraction(1, n)))
            for z in z_grid
        ]

    printout("Symmetric table for F" + str(tuple(weight)), min_verbosity=1)
    table = ConvergenceTable("jw")
    levels = _levels(weight, n_list, workers, compute)
    for n, values in zip(n_list, levels):
        for i, z in enumerate(z_grid):
            if values is None:
                table.add_row(n, z, None, None, status="resource_limit")
            else:
                table.add_row(n, z, values[i], references[i])
    return table


def moment_convergence(
    solver, intertwiner, weight, direction, order, n_list, workers=1
):
    """
    Compare the moments of mu_lambda^n with those of the limit measure.

    The limit moment is V(<., z>^m)(lambda); both sides are exact, and so
    is the error before it is converted for the table.

    Parameters
    ----------
    solver : hodunkl.cherednik.HeckmanOpdam
        Solver of (R, k).

    intertwiner : hodunkl.dunkl.DunklIntertwiner
        Intertwiner of the same (R, k).

    weight : tuple of int
        Weight lambda.

    direction : tuple of Fraction
        Moment direction z.

    order : int
        Moment order m.

    n_list : list of int
        Scaling factors.

    workers : int
        Number of threads working on different n.

    Returns
    -------
    table : ConvergenceTable
        One row per n.
    """
    R = solver.root_system
    reference = v_moment(
        intertwiner, R.weight_to_point(weight), direction, order
    )

    def compute(n):
        return measure_moment(
            measure_approx(solver, weight, n), direction, order
        )

    table = ConvergenceTable("moment" + str(order))
    levels = _levels(weight, n_list, workers, compute)
    for n, value in zip(n_list, levels):
        if value is None:
            table.add_row(n, direction, None, None, status="resource_limit")
        else:
            table.add_row(n, direction, value, reference)
    return table


def kernel_bound_check(intertwiner, weight, z, truncation_order):
    """
    Check min_w e^<w lambda, z> <= Exp_W(lambda, z) <= max_w e^<w lambda, z>.

    Holds for real z because Exp_W(lambda, .) is the Laplace transform of a
    probability measure supported in C(lambda). The truncation tail and a
    relative rounding allowance of 1e-12 widen the interval.

    Parameters
    ----------
    intertwiner : hodunkl.dunkl.DunklIntertwiner
        Intertwiner of (R, k).

    weight : tuple of int
        Weight lambda.

    z : sequence of Fraction
        Real point in simple-root coordinates.

    truncation_order : int
        Truncation order N.

    Returns
    -------
    result : dict
        Value, bounds, tail and whether the bounds hold.
    """
    R = intertwiner.root_system
    value, tail = expw_truncated(
        intertwiner, R.weight_to_point(weight), z, truncation_order
    )
    exponents = [float(R.weight_pairing(mu, z)) for mu in R.orbit(weight)]
    lower = math.exp(min(exponents))
    upper = math.exp(max(exponents))
    allowance = tail + 1e-12 * upper
    return {
        "value": value.real,
        "lower": lower,
        "upper": upper,
        "tail": tail,
        "passed": lower - allowance <= value.real <= upper + allowance,
    }


def _scaled(z, factor):
    if not isinstance(z, ComplexPoint):
        z = ComplexPoint.from_real(z)
    return z.scaled(factor)
