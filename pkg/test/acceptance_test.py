from fractions import Fraction

import hodunkl
from hodunkl.cherednik import HeckmanOpdam
from hodunkl.dunkl import DunklIntertwiner
from hodunkl.limits import (
    measure_approx,
    moment_convergence,
    scaling_error_table,
    support_check,
    symmetric_error_table,
)
from hodunkl.rankone import bessel_limit_table
from hodunkl.rootsystems import (
    Multiplicity,
    build_root_system,
    root_system_from_code,
)
from hodunkl.verification import (
    CheckResult,
    bounded_weights,
    hull_lemma_sweep,
    intertwiner_sweep,
    multiplicity_grid,
    positivity_sweep,
    random_hull_agreement,
    rankone_agreement,
    spectral_orbit_sweep,
    weight_box,
)
import pytest

# Largest grid error tolerated at the finest scaling level. The error
# decays like C / n with C up to about 0.92 on the grid below (A1, k = 1/2,
# lambda = 1), the bias coming from the shift k alpha / 2 in n lambda~;
# rank one therefore runs up to n = 128.
scaling_tolerance = 1e-2

# Largest ratio of the finest to the previous max-grid error (O(1/n)).
scaling_rate = 0.6

# Downset size bounding the weights of the sweeps.
sweep_downset_size = 200

# Tolerance of the moment targets.
moment_tolerance = 1e-2

# Tolerance of the Gegenbauer to Bessel limit at n = 1000.
bessel_tolerance = 1e-3

half = Fraction(1, 2)
sweep_systems = ["A1", "A2", "B2", "G2"]
sweep_values = [Fraction(0), half, Fraction(1), Fraction(5, 2)]
scaling_levels = {
    "A1": [4, 8, 16, 32, 64, 128],
    "A2": [4, 8, 16, 32, 64],
}


def _line_grid(rank):
    # Five real points with |z| <= 1 on the first simple root.
    return [
        (Fraction(t, 4),) + (Fraction(0),) * (rank - 1)
        for t in range(-2, 3)
    ]


def _assert_converges(table, z_grid, n_list):
    for z in z_grid:
        errors = table.errors(z)
        assert errors[64] < errors[4] or errors[4] < 1e-14, z
    finest, previous = n_list[-1], n_list[-2]
    assert table.max_error(finest) < scaling_tolerance
    assert table.max_error(finest) < scaling_rate * table.max_error(previous)


class TestSweeps:
    """Tests the sweep helpers on small inputs."""

    def test_helpers(self):
        """Multiplicity grids and weight boxes."""
        R = build_root_system("B", 2)
        grid = multiplicity_grid(R, [0, half])
        assert len(grid) == 4
        assert len(weight_box(R, 1)) == 9
        result = CheckResult("example", count=2)
        assert result.passed
        result.fail({"reason": "example"})
        assert not result.to_json()["passed"]

    def test_small_sweeps(self):
        """Every sweep passes on A1 and A2 with small weights."""
        codes = ["A1", "A2"]
        values = [Fraction(0), half]
        results = [
            positivity_sweep(codes, values, 1, 50),
            hull_lemma_sweep(codes, 1, 50),
            random_hull_agreement(codes, 50, 2),
            intertwiner_sweep(codes, values, 3),
            rankone_agreement([half], 3),
            spectral_orbit_sweep(codes, values, 1, 50),
        ]
        for result in results:
            assert result.passed, result.to_json()
            assert result.count > 0

    def test_bounded_weights(self):
        """Every weight within the downset limit is found, beyond any box."""
        R = build_root_system("A", 1)
        weights, skipped = bounded_weights(R, 5)
        # |downset(n)| = n for n > 0 and |downset(-n)| = n + 1.
        assert [w for w, _ in weights] == [(n,) for n in range(-4, 6)]
        assert skipped == 1

        R = build_root_system("A", 2)
        weights, _ = bounded_weights(R, 12)
        found = {w for w, _ in weights}
        assert all(len(downset) <= 12 for _, downset in weights)
        in_box = set()
        for weight in weight_box(R, 6):
            try:
                R.downset(weight, 12)
            except hodunkl.ResourceLimitError:
                continue
            in_box.add(weight)
        assert in_box <= found
        assert (3, 0) in found

        result = positivity_sweep(["A2"], [half], None, 12)
        assert result.passed, result.failures
        assert result.count == len(weights)


@pytest.mark.slow
class TestAcceptance:
    """Acceptance scenarios for positivity, hulls, oracles and limits."""

    def test_positivity_and_eigen_equations(self):
        """a >= 0, sum b = 1, a_ll = 1 and exact eigen equations."""
        result = positivity_sweep(
            sweep_systems, sweep_values, None, sweep_downset_size
        )
        assert result.passed, result.failures
        expected = 0
        for code in sweep_systems:
            R = root_system_from_code(code)
            weights, _ = bounded_weights(R, sweep_downset_size)
            expected += len(weights) * len(multiplicity_grid(R, sweep_values))
        assert result.count == expected

    def test_hull_lemma(self):
        """Downsets lie in C(lambda); both hull tests agree."""
        result = hull_lemma_sweep(sweep_systems, None, sweep_downset_size)
        assert result.passed, result.failures
        result = random_hull_agreement(sweep_systems, 1000, 2)
        assert result.passed, result.failures
        assert result.count == 1000 * len(sweep_systems)

    def test_rank_one_oracles(self):
        """E_n / c_n and F against the closed formulas, |n| <= 8."""
        result = rankone_agreement(
            [Fraction(0), half, Fraction(1), Fraction(2)], 8
        )
        assert result.passed, result.failures

    def test_intertwiner(self):
        """T V = V d on all monomials of degree <= 8, rank <= 2."""
        result = intertwiner_sweep(
            sweep_systems, [Fraction(0), half, Fraction(1)], 8
        )
        assert result.passed, result.failures

    def test_spectral_orbit(self):
        """lambda~ in W(lambda + rho) for dominant lambda."""
        result = spectral_orbit_sweep(
            sweep_systems, sweep_values, None, sweep_downset_size
        )
        assert result.passed, result.failures

    @pytest.mark.parametrize(
        "code, weight", [("A1", (1,)), ("A1", (-1,)), ("A2", (1, 0))]
    )
    def test_scaling_limit(self, code, weight):
        """E_{n lambda}(z / n) / c tends to Exp_W(lambda, z)."""
        R = root_system_from_code(code)
        k = Multiplicity(R, half)
        solver = HeckmanOpdam(R, k)
        V = DunklIntertwiner(R, k)
        z_grid = _line_grid(R.rank)
        n_list = scaling_levels[code]
        table = scaling_error_table(solver, V, weight, z_grid, n_list, 30)
        _assert_converges(table, z_grid, n_list)
        if R.is_dominant(weight):
            table = symmetric_error_table(
                solver, V, weight, z_grid, n_list, 30
            )
            _assert_converges(table, z_grid, n_list)

    def test_moments(self):
        """Moments of mu_1^128 approach V(<., z>^m)(lambda) = 1/2."""
        R = build_root_system("A", 1)
        k = Multiplicity(R, half)
        solver = HeckmanOpdam(R, k)
        V = DunklIntertwiner(R, k)
        for order in [1, 2]:
            table = moment_convergence(solver, V, (1,), (half,), order, [128])
            assert table.rows[0]["reference"] == 0.5
            assert table.max_error(128) < moment_tolerance

    def test_measure_support(self):
        """Atoms of mu_{w1 + w2}^2 on A2 lie in C(lambda)."""
        R = build_root_system("A", 2)
        solver = HeckmanOpdam(R, Multiplicity(R, half))
        measure = measure_approx(solver, (1, 1), 2)
        assert measure.is_probability()
        assert support_check(measure, (1, 1))

    @pytest.mark.parametrize("k", [half, Fraction(1)])
    def test_gegenbauer_bessel(self, k):
        """|Q_n^k(cos(z/n)) - j_{k-1/2}(z)| < 1e-3 at n = 1000."""
        table = bessel_limit_table(k, [0.5, 1.0, 2.0], [10, 1000])
        assert table.max_error(1000) < bessel_tolerance
        assert table.errors((2.0,))[1000] < table.errors((2.0,))[10]
