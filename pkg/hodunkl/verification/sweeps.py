"""Invariant sweeps over root systems, multiplicities and weights."""

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
import itertools
import math

import numpy as np
from tqdm.auto import tqdm

from hodunkl.algebra.multipoly import MultiPoly, monomial_basis
from hodunkl.cherednik.cache import EPolyCache
from hodunkl.cherednik.heckman_opdam import HeckmanOpdam
from hodunkl.common.exceptions import InvariantViolation, ResourceLimitError
from hodunkl.common.parallelizer import get_current_verbosity, printout
from hodunkl.dunkl.intertwiner import DunklIntertwiner
from hodunkl.dunkl.operators import apply_dunkl
from hodunkl.rankone.oracles import (
    e_oracle_defect,
    f_oracle_table,
)
from hodunkl.rootsystems.convex_hull import (
    hull_contains_dual_cone,
    hull_contains_lp,
)
from hodunkl.rootsystems.multiplicity import Multiplicity
from hodunkl.rootsystems.root_system import (
    build_root_system,
    root_system_from_code,
)

# Relative tolerance of the F oracle comparison, |F - Q| / max(1, |Q|).
F_ORACLE_TOLERANCE = 1e-10

# Number of random points per degree in the F oracle comparison.
F_ORACLE_POINTS = 20

# Half width of the box random hull pairs are drawn from when the sweeps
# are not restricted to a box.
RANDOM_HULL_BOX = 3


@dataclass
class CheckResult:
    """
    Outcome of one sweep.

    Attributes
    ----------
    name : str
        Name of the check.

    count : int
        Number of individual cases checked.

    skipped : int
        Cases skipped because a size limit was hit.

    failures : list
        JSON-able records of the failing cases.
    """

    name: str
    count: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self):
        """True if no case failed."""
        return len(self.failures) == 0

    def fail(self, record):
        """Record a failing case."""
        self.failures.append(record)

    def to_json(self):
        """Return the report entry of this check."""
        return {
            "name": self.name,
            "passed": self.passed,
            "count": self.count,
            "skipped": self.skipped,
            "failures": self.failures,
        }


def _progress(iterable, description):
    return tqdm(
        list(iterable),
        desc=description,
        disable=get_current_verbosity() < 1,
    )


def _root_systems(codes):
    for code in codes:
        yield root_system_from_code(code)


def multiplicity_grid(root_system, values):
    """
    Return every multiplicity whose values per root orbit lie in values.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    values : list of Fraction
        Values each orbit runs through independently.

    Returns
    -------
    multiplicities : list of Multiplicity
        One multiplicity per combination.
    """
    labels = sorted(Multiplicity(root_system, 0).labels.values())
    return [
        Multiplicity(root_system, dict(zip(labels, combination)))
        for combination in itertools.product(values, repeat=len(labels))
    ]


def weight_box(root_system, size):
    """Return all weights with coordinates in [-size, size]."""
    return [
        tuple(c)
        for c in itertools.product(
            range(-size, size + 1), repeat=root_system.rank
        )
    ]


def _lattice_step(root_system):
    # Smallest d with d omega_i in the root lattice for every i.
    step = 1
    for i in range(root_system.rank):
        unit = tuple(int(i == j) for j in range(root_system.rank))
        for x in root_system.weight_to_point(unit):
            step = math.lcm(step, x.denominator)
    return step


def bounded_weights(root_system, max_downset_size):
    """
    Return every weight whose downset has at most max_downset_size members.

    If lambda_+ <= mu_+ in dominance order, the downset of lambda_+ is
    contained in that of mu_+, and the downset of any w lambda contains that
    of lambda_+. Since d omega_i lies in Q_+ for the lattice step d, the
    dominant weights are explored from the residues [0, d)^r by adding
    d omega_i, stopping where the limit is exceeded; the orbits of the
    dominant weights found are then filtered one by one. The result is
    complete, not a box.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    max_downset_size : int
        Largest admitted downset size.

    Returns
    -------
    weights : list of (tuple of int, list)
        Weights with their downsets, sorted by weight.

    skipped : int
        Orbit members of admitted dominant weights whose own downset is too
        large.
    """
    R = root_system
    step = _lattice_step(R)
    queue = deque(itertools.product(range(step), repeat=R.rank))
    seen = set(queue)
    dominant = []
    while queue:
        weight = queue.popleft()
        try:
            R.downset(weight, max_downset_size)
        except ResourceLimitError:
            continue
        dominant.append(weight)
        for i in range(R.rank):
            larger = tuple(
                c + step * int(i == j) for j, c in enumerate(weight)
            )
            if larger not in seen:
                seen.add(larger)
                queue.append(larger)

    weights = []
    skipped = 0
    for weight_plus in dominant:
        for weight in R.orbit(weight_plus):
            try:
                weights.append((weight, R.downset(weight, max_downset_size)))
            except ResourceLimitError:
                skipped += 1
    printout(
        R.code + ":",
        len(weights),
        "weights with downsets of at most",
        max_downset_size,
        "members",
        min_verbosity=2,
    )
    return sorted(weights), skipped


def _sized_weights(root_system, size, max_downset_size, result):
    # Weights within the downset limit, optionally restricted to a box.
    if size is None:
        weights, skipped = bounded_weights(root_system, max_downset_size)
        result.skipped += skipped
        yield from weights
        return
    for weight in weight_box(root_system, size):
        try:
            yield weight, root_system.downset(weight, max_downset_size)
        except ResourceLimitError:
            result.skipped += 1


def positivity_sweep(
    codes, values, size, max_downset_size, seed=0, cache=None
):
    """
    Check a >= 0, sum b = 1 and a_{lambda,lambda} = 1 for all E_lambda.

    The eigen equations are verified exactly by every solve. For dominant
    lambda, the coefficients of P_lambda are checked to be nonnegative too.

    Parameters
    ----------
    codes : list of str
        Root system codes.

    values : list of Fraction
        Multiplicity values per orbit.

    size : int
        Half width of the weight box. If None, every weight whose downset
        fits the limit is checked (see bounded_weights).

    max_downset_size : int
        Weights with larger downsets are skipped.

    seed : int
        Seed of the regular direction search.

    cache : EPolyCache
        Cache shared by all solvers of the sweep. A private in-memory
        cache is used if None.

    Returns
    -------
    result : CheckResult
        One case per (R, k, lambda).
    """
    result = CheckResult("positivity")
    cache = cache if cache is not None else EPolyCache()
    for R in _root_systems(codes):
        weights = [
            w for w, _ in _sized_weights(R, size, max_downset_size, result)
        ]
        for k in multiplicity_grid(R, values):
            solver = HeckmanOpdam(
                R,
                k,
                downset_size_limit=max_downset_size,
                seed=seed,
                cache=cache,
            )
            for weight in _progress(weights, "E " + R.code + " " + str(k)):
                result.count += 1
                record = {
                    "root_system": R.code,
                    "multiplicity": k.to_json(),
                    "weight": list(weight),
                }
                try:
                    epoly = solver.compute_E(weight)
                    checks = epoly.check_invariants()
                    if R.is_dominant(weight):
                        symmetric = solver.symmetrize_P(epoly)
                        checks["symmetric_positivity"] = all(
                            c >= 0 for _, c in symmetric.terms()
                        )
                except InvariantViolation as error:
                    result.fail(dict(record, **error.to_json()))
                    continue
                failed = sorted(name for name, ok in checks.items() if not ok)
                if failed:
                    result.fail(dict(record, invariants=failed))
    return result


def hull_lemma_sweep(codes, size, max_downset_size):
    """
    Check that every nu in every downset lies in C(lambda).

    Weights are those of the box of half width size, or every weight within
    the downset limit if size is None.
    """
    result = CheckResult("hull_lemma")
    for R in _root_systems(codes):
        for weight, downset in _sized_weights(
            R, size, max_downset_size, result
        ):
            for nu in downset:
                result.count += 1
                try:
                    inside = R.hull_contains(weight, R.weight_to_point(nu))
                except InvariantViolation as error:
                    result.fail(error.to_json())
                    continue
                if not inside:
                    result.fail(
                        {
                            "root_system": R.code,
                            "weight": list(weight),
                            "nu": list(nu),
                        }
                    )
    return result


def random_hull_agreement(codes, pairs, size, seed=0):
    """
    Compare both hull tests on random pairs (lambda, x).

    x has coordinates with denominators up to 4 in a box large enough that
    both outcomes occur.
    """
    result = CheckResult("hull_methods_agree")
    rng = np.random.default_rng(seed)
    for R in _root_systems(codes):
        for _ in _progress(range(pairs), "hull " + R.code):
            weight = tuple(
                int(c) for c in rng.integers(-size, size + 1, R.rank)
            )
            denominator = int(rng.integers(1, 5))
            bound = 2 * size * denominator
            point = tuple(
                Fraction(int(c), denominator)
                for c in rng.integers(-bound, bound + 1, R.rank)
            )
            result.count += 1
            by_cone = hull_contains_dual_cone(R, weight, point)
            by_combination = hull_contains_lp(R, weight, point)
            if by_cone != by_combination:
                result.fail(
                    {
                        "root_system": R.code,
                        "weight": list(weight),
                        "point": [str(x) for x in point],
                        "dual_cone": by_cone,
                        "convex_combination": by_combination,
                    }
                )
    return result


def intertwiner_sweep(codes, values, max_degree):
    """
    Check T_alpha_j V p = V d_alpha_j p on all monomials up to max_degree.

    Also checks V(1) = 1 and, for k = 0, that every stage is the identity.
    """
    result = CheckResult("intertwining_identity")
    for R in _root_systems(codes):
        for k in multiplicity_grid(R, values):
            V = DunklIntertwiner(R, k, max_degree)
            result.count += 1
            if V.apply(MultiPoly.constant(R.rank, 1)) != MultiPoly.constant(
                R.rank, 1
            ):
                result.fail({"root_system": R.code, "check": "V(1) = 1"})
            for degree in _progress(
                range(1, max_degree + 1), "V " + R.code + " " + str(k)
            ):
                stage = V.stage(degree)
                if k.is_zero() and not stage.is_identity():
                    result.fail(
                        {
                            "root_system": R.code,
                            "degree": degree,
                            "check": "identity at k = 0",
                        }
                    )
                for exponents in monomial_basis(R.rank, degree):
                    monomial = MultiPoly.monomial(exponents)
                    image = stage.apply(monomial)
                    for alpha in R.simple_roots:
                        result.count += 1
                        left = apply_dunkl(R, k, alpha, image)
                        right = V.apply(monomial.derivative(alpha))
                        if left != right:
                            result.fail(
                                {
                                    "root_system": R.code,
                                    "multiplicity": k.to_json(),
                                    "exponents": list(exponents),
                                    "direction": [str(a) for a in alpha],
                                }
                            )
    return result


def relative_error(row):
    """Return |approx - reference| / max(1, |reference|) of a table row."""
    reference = complex(row["reference"], row["reference_imag"])
    return row["error"] / max(1.0, abs(reference))


def rankone_agreement(values, max_n, seed=0, cache=None):
    """
    Compare the A1 solver with the closed rank-one formulas.

    E_n / c_n must equal G(n~, .) exactly for |n| <= max_n, and
    F(n + k, z) must match Q_n^k(cosh z) at random z within
    F_ORACLE_TOLERANCE, relative to max(1, |Q_n^k(cosh z)|). F grows like
    e^{n |z|}, so an absolute bound would be below the float resolution.
    """
    result = CheckResult("rankone_oracle")
    cache = cache if cache is not None else EPolyCache()
    R = build_root_system("A", 1)
    rng = np.random.default_rng(seed)
    for value in values:
        solver = HeckmanOpdam(
            R, Multiplicity(R, value), seed=seed, cache=cache
        )
        for n in _progress(range(-max_n, max_n + 1), "A1 k=" + str(value)):
            result.count += 1
            defect = e_oracle_defect(solver, n)
            if not defect.is_zero():
                result.fail(
                    {"k": str(value), "n": n, "defect": defect.to_json()}
                )
        z_values = [float(t) for t in rng.uniform(-2, 2, F_ORACLE_POINTS)]
        table = f_oracle_table(solver, max_n, z_values)
        for row in table.rows:
            result.count += 1
            error = relative_error(row)
            if not error < F_ORACLE_TOLERANCE:
                result.fail(
                    {
                        "k": str(value),
                        "n": row["n"],
                        "z": row["z"],
                        "error": row["error"],
                        "relative_error": error,
                    }
                )
    return result


def spectral_orbit_sweep(codes, values, size, max_downset_size, seed=0):
    """Check that lambda~ lies in W(lambda + rho) for dominant lambda."""
    result = CheckResult("spectral_orbit")
    for R in _root_systems(codes):
        weights = [
            w
            for w, _ in _sized_weights(R, size, max_downset_size, result)
            if R.is_dominant(w)
        ]
        for k in multiplicity_grid(R, values):
            solver = HeckmanOpdam(
                R,
                k,
                downset_size_limit=max_downset_size,
                seed=seed,
            )
            for weight in weights:
                result.count += 1
                if not solver.spectral_orbit_check(weight):
                    result.fail(
                        {
                            "root_system": R.code,
                            "multiplicity": k.to_json(),
                            "weight": list(weight),
                        }
                    )
    return result


def run_all(verification, seed=0, cache_directory=None):
    """
    Run every sweep with the options of a verification section.

    Parameters
    ----------
    verification : dict
        Validated verification options (see RunConfig.verification).

    seed : int
        Seed for random cases and regular directions.

    cache_directory : str
        Directory of the on-disk E cache shared by all sweeps. Cached files
        are verified on reading, so a corrupted file fails the sweep that
        reads it.

    Returns
    -------
    results : list of CheckResult
        One result per sweep.
    """
    codes = verification["root_systems"]
    values = verification["multiplicity_values"]
    size = verification["weight_box"]
    limit = verification["max_downset_size"]
    small_rank = [c for c in codes if int(c[1:]) <= 2]
    cache = EPolyCache(cache_directory)
    results = [
        positivity_sweep(codes, values, size, limit, seed, cache),
        hull_lemma_sweep(codes, size, limit),
        random_hull_agreement(
            codes,
            verification["random_hull_pairs"],
            size if size is not None else RANDOM_HULL_BOX,
            seed,
        ),
        intertwiner_sweep(
            small_rank, values, verification["intertwiner_degree"]
        ),
        rankone_agreement(
            verification["rankone_multiplicities"],
            verification["rankone_max_n"],
            seed,
            cache,
        ),
        spectral_orbit_sweep(codes, values, size, limit, seed),
    ]
    for result in results:
        printout(
            result.name + ":",
            "passed" if result.passed else "FAILED",
            "(" + str(result.count) + " cases, "
            + str(result.skipped) + " skipped)",
            min_verbosity=1,
        )
    return results
