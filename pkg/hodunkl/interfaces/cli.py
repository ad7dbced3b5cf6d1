"""Command line interface of hodunkl."""

import argparse
import json
import sys

import pandas as pd

from hodunkl.cherednik.heckman_opdam import HeckmanOpdam
from hodunkl.common.exceptions import (
    ConfigurationError,
    HodunklError,
    InvariantViolation,
    ResourceLimitError,
)
from hodunkl.common.json_serializable import fraction_to_json
from hodunkl.common.parameters import Parameters
from hodunkl.common.parallelizer import parallel_map, printout
from hodunkl.dunkl.intertwiner import DunklIntertwiner
from hodunkl.dunkl.kernel import bessel_JW, expw_truncated
from hodunkl.limits.convergence import (
    CSV_FLOAT_FORMAT,
    kernel_bound_check,
    moment_convergence,
    scaling_error_table,
    symmetric_error_table,
)
from hodunkl.limits.measure import measure_approx, support_check
from hodunkl.rankone.oracles import (
    bessel_limit_table,
    e_oracle_defect,
    f_oracle_table,
)
from hodunkl.rootsystems.multiplicity import Multiplicity
from hodunkl.rootsystems.root_system import root_system_from_code
from hodunkl.verification.sweeps import run_all
from hodunkl.version import __version__


def _setup(run_config):
    R = root_system_from_code(
        run_config.root_system_code, run_config.max_weyl_order
    )
    k = Multiplicity(R, run_config.multiplicity)
    return R, k


def _intertwiner(run_config, R, k):
    return DunklIntertwiner(R, k, run_config.max_stage_degree)


def _tables_frame(tables):
    # One CSV for several tables, told apart by a leading "table" column.
    frames = []
    for table in tables:
        frame = table.to_dataframe()
        frame.insert(0, "table", table.title)
        frames.append(frame)
    return pd.concat(frames, ignore_index=True)


def cmd_epoly(run_config):
    """
    Compute E_lambda and verify its invariants.

    Returns
    -------
    report, frame : dict, pandas.DataFrame
        The EPoly dump and its coefficient table.
    """
    R, k = _setup(run_config)
    solver = HeckmanOpdam.from_run_config(run_config, R, k)
    epoly = solver.compute_E(run_config.weight)
    checks = epoly.check_invariants()
    for name, ok in sorted(checks.items()):
        if not ok:
            raise InvariantViolation(
                name,
                "E" + str(epoly.weight) + " violates " + name + ".",
                epoly.to_json(),
            )
    report = epoly.to_json()
    report["invariants"] = checks
    b = epoly.b_coefficients()
    frame = pd.DataFrame(
        [
            {
                "nu": ",".join(str(c) for c in nu),
                "a": str(a),
                "b": str(b[nu]),
            }
            for nu, a in epoly.coefficients.terms()
        ],
        columns=["nu", "a", "b"],
    )
    return report, frame


def cmd_dunkl_v(run_config):
    """Dump the intertwiner stages up to the configured degree."""
    R, k = _setup(run_config)
    V = _intertwiner(run_config, R, k)
    stages = [V.stage(n) for n in range(run_config.dump_degree + 1)]
    report = {
        "object": "DunklIntertwiner",
        "root_system": R.code,
        "multiplicity": k.to_json(),
        "stages": [stage.to_json() for stage in stages],
    }
    rows = []
    for stage in stages:
        for j, source in enumerate(stage.basis):
            for i, target in enumerate(stage.basis):
                if stage.matrix[i][j] != 0:
                    rows.append(
                        {
                            "degree": stage.degree,
                            "monomial": ",".join(str(e) for e in source),
                            "term": ",".join(str(e) for e in target),
                            "coefficient": str(stage.matrix[i][j]),
                        }
                    )
    frame = pd.DataFrame(
        rows, columns=["degree", "monomial", "term", "coefficient"]
    )
    return report, frame


def cmd_expw(run_config):
    """Evaluate Exp_W(lambda, z) and J_W(lambda, z) on the z-grid."""
    R, k = _setup(run_config)
    V = _intertwiner(run_config, R, k)
    x = R.weight_to_point(run_config.weight)
    N = run_config.truncation_order

    def row(z):
        value, tail = expw_truncated(V, x, z, N)
        bound = kernel_bound_check(V, run_config.weight, z, N)
        if not bound["passed"]:
            raise InvariantViolation(
                "kernel_bound",
                "Exp_W leaves its bounds at z = " + str(z) + ".",
                {"z": [str(c) for c in z], "bound": bound},
            )
        jw = bessel_JW(V, x, z, N)
        return {
            "z": ",".join(str(c) for c in z),
            "expw": value.real,
            "expw_imag": value.imag,
            "tail": tail,
            "jw": jw.real,
            "jw_imag": jw.imag,
        }

    rows = parallel_map(row, run_config.z_grid, run_config.workers)
    frame = pd.DataFrame(
        rows, columns=["z", "expw", "expw_imag", "tail", "jw", "jw_imag"]
    )
    report = {
        "object": "KernelValues",
        "root_system": R.code,
        "multiplicity": k.to_json(),
        "weight": list(run_config.weight),
        "truncation_order": N,
        "rows": [
            {
                key: float(CSV_FLOAT_FORMAT % v) if isinstance(v, float) else v
                for key, v in r.items()
            }
            for r in rows
        ],
    }
    return report, frame


def cmd_limit(run_config):
    """Write the scaling, moment and symmetric convergence tables."""
    R, k = _setup(run_config)
    solver = HeckmanOpdam.from_run_config(run_config, R, k)
    V = _intertwiner(run_config, R, k)
    weight = run_config.weight
    arguments = (
        run_config.z_grid,
        run_config.n_list,
        run_config.truncation_order,
        run_config.workers,
    )
    tables = [scaling_error_table(solver, V, weight, *arguments)]
    tables.append(
        moment_convergence(
            solver,
            V,
            weight,
            run_config.moment_direction,
            run_config.moment_order,
            run_config.n_list,
            run_config.workers,
        )
    )
    if R.is_dominant(weight):
        tables.append(symmetric_error_table(solver, V, weight, *arguments))
    else:
        printout(
            "Skipping the symmetric table for the non-dominant weight",
            weight,
            min_verbosity=1,
        )
    report = {
        "object": "LimitReport",
        "root_system": R.code,
        "multiplicity": k.to_json(),
        "weight": list(weight),
        "tables": [table.to_json() for table in tables],
    }
    return report, _tables_frame(tables)


def cmd_measure(run_config):
    """Dump mu_lambda^n for every n, with support check and moments."""
    R, k = _setup(run_config)
    solver = HeckmanOpdam.from_run_config(run_config, R, k)
    weight = run_config.weight
    direction = run_config.moment_direction
    order = run_config.moment_order

    def measure(n):
        return measure_approx(solver, weight, n)

    measures = parallel_map(measure, run_config.n_list, run_config.workers)
    entries = []
    rows = []
    for n, mu in zip(run_config.n_list, measures):
        if not support_check(mu, weight):
            raise InvariantViolation(
                "support",
                "mu" + str(weight) + "^" + str(n) + " leaves C(lambda).",
                mu.to_json(),
            )
        moment = mu.moment(direction, order)
        entry = mu.to_json()
        entry["n"] = n
        entry["moment"] = fraction_to_json(moment)
        entries.append(entry)
        for point in mu.support():
            rows.append(
                {
                    "n": n,
                    "point": ",".join(str(c) for c in point),
                    "weight": str(mu.atoms[point]),
                }
            )
    report = {
        "object": "MeasureReport",
        "root_system": R.code,
        "multiplicity": k.to_json(),
        "weight": list(weight),
        "moment_order": order,
        "moment_direction": [fraction_to_json(c) for c in direction],
        "measures": entries,
    }
    return report, pd.DataFrame(rows, columns=["n", "point", "weight"])


def cmd_verify(run_config):
    """Run every invariant sweep; the report lists pass/fail per check."""
    results = run_all(
        run_config.verification,
        run_config.seed,
        run_config.cache_directory,
    )
    report = {
        "object": "VerificationReport",
        "passed": all(result.passed for result in results),
        "checks": [result.to_json() for result in results],
    }
    frame = pd.DataFrame(
        [
            {
                "name": r.name,
                "passed": r.passed,
                "count": r.count,
                "skipped": r.skipped,
                "failures": len(r.failures),
            }
            for r in results
        ],
        columns=["name", "passed", "count", "skipped", "failures"],
    )
    return report, frame


def cmd_rankone(run_config):
    """Compare the A1 solver with the closed rank-one formulas."""
    if run_config.root_system_code != "A1":
        raise ConfigurationError(
            "The rankone command needs root system A1, got "
            + run_config.root_system_code
            + "."
        )
    R, k = _setup(run_config)
    value = k.per_label()["uniform"]
    solver = HeckmanOpdam.from_run_config(run_config, R, k)
    max_n = run_config.verification["rankone_max_n"]
    for n in range(-max_n, max_n + 1):
        defect = e_oracle_defect(solver, n)
        if not defect.is_zero():
            raise InvariantViolation(
                "rankone_oracle",
                "E_" + str(n) + " / c_" + str(n) + " differs from G.",
                {"n": n, "defect": defect.to_json()},
            )
    # Points of the line, t = 2u.
    line = [float(2 * z[0]) for z in run_config.z_grid]
    tables = [
        f_oracle_table(solver, max_n, line),
        bessel_limit_table(value, line, run_config.n_list),
    ]
    report = {
        "object": "RankOneReport",
        "multiplicity": k.to_json(),
        "e_oracle": {"max_n": max_n, "agrees": True},
        "tables": [table.to_json() for table in tables],
    }
    return report, _tables_frame(tables)


HANDLERS = {
    "epoly": cmd_epoly,
    "dunkl-v": cmd_dunkl_v,
    "expw": cmd_expw,
    "limit": cmd_limit,
    "measure": cmd_measure,
    "verify": cmd_verify,
    "rankone": cmd_rankone,
}


def build_parser():
    """Return the argument parser with one subparser per command."""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON configuration file")
    common.add_argument("--out", help="Output file (default: stdout)")
    common.add_argument(
        "--format", choices=("json", "csv"), help="Output format"
    )
    common.add_argument("--workers", type=int, help="Worker threads")
    common.add_argument("--seed", type=int, help="Random seed")
    common.add_argument(
        "--verbosity",
        type=int,
        help="Diagnostic output level (forced to 0 when writing to stdout)",
    )

    parser = argparse.ArgumentParser(
        prog="hodunkl",
        description="Heckman-Opdam polynomials, Dunkl kernels and their "
        "scaling limits in exact arithmetic.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + __version__
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, handler in HANDLERS.items():
        subparsers.add_parser(
            command,
            parents=[common],
            help=handler.__doc__.strip().split("\n")[0],
        )
    return parser


def load_parameters(arguments):
    """Read the configuration and apply the command line overrides."""
    if arguments.config is not None:
        parameters = Parameters.load_from_json(arguments.config)
    else:
        parameters = Parameters()
    if arguments.out is not None:
        parameters.running.output_path = arguments.out
    if arguments.format is not None:
        parameters.running.output_format = arguments.format
    if arguments.workers is not None:
        parameters.running.workers = arguments.workers
    if arguments.seed is not None:
        parameters.manual_seed = arguments.seed
    if arguments.verbosity is not None:
        parameters.verbosity = arguments.verbosity
    if parameters.running.output_path is None:
        parameters.verbosity = 0
    return parameters


def _write(text, path):
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)


def _report_failure(command, error):
    # Writes the JSON failure record to stderr and returns the exit code.
    if isinstance(error, InvariantViolation):
        record = error.to_json()
    else:
        record = {
            "status": type(error).__name__,
            "message": str(error),
        }
    record["command"] = command
    record["exit_code"] = error.exit_code
    sys.stderr.write(json.dumps(record, sort_keys=True) + "\n")
    return error.exit_code


def main(argv=None):
    """
    Run one command.

    Parameters
    ----------
    argv : list of str
        Command line arguments without the program name.

    Returns
    -------
    exit_code : int
        0 on success, 1 for a violated invariant, 2 for a configuration
        error and 3 for a resource limit. Values outside the float range
        count as a resource limit, other invalid values as a configuration
        error.
    """
    arguments = build_parser().parse_args(argv)
    try:
        parameters = load_parameters(arguments)
        run_config = parameters.to_run_config()
        report, frame = HANDLERS[arguments.command](run_config)
    except HodunklError as error:
        return _report_failure(arguments.command, error)
    except OverflowError as error:
        return _report_failure(
            arguments.command, ResourceLimitError(str(error))
        )
    except (ValueError, TypeError) as error:
        return _report_failure(
            arguments.command, ConfigurationError(str(error))
        )

    if run_config.output_format == "csv":
        text = frame.to_csv(index=False, float_format=CSV_FLOAT_FORMAT)
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    _write(text, run_config.output_path)
    if report.get("passed") is False:
        return InvariantViolation.exit_code
    return 0
