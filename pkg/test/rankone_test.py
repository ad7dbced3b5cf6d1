from fractions import Fraction
import math

import hodunkl
from hodunkl.algebra import TrigPoly, eval_trig
from hodunkl.cherednik import HeckmanOpdam
from hodunkl.rankone import (
    bessel_j,
    bessel_limit_table,
    closed_E,
    closed_E_trig,
    e_oracle_defect,
    f_oracle_table,
    gegenbauer_coefficients,
    gegenbauer_Q,
    hyp2f1,
    line_to_point,
)
from hodunkl.rootsystems import Multiplicity, build_root_system
from hodunkl.verification import rankone_agreement, relative_error
import numpy as np
import pytest
from scipy.special import gamma, jv

# Accuracy of the float comparisons with closed formulas.
accuracy = 1e-10

half = Fraction(1, 2)


class TestSpecialFunctions:
    """Tests the hypergeometric, Gegenbauer and Bessel functions."""

    def test_hyp2f1_terminating(self):
        """Exact terminating series."""
        value = hyp2f1(-2, 3, half, Fraction(1, 4))
        assert value == -1
        assert isinstance(value, Fraction)
        assert np.isclose(hyp2f1(-2, 3, 0.5, 0.25), -1, atol=accuracy)

    def test_hyp2f1_series(self):
        """2F1(1, 1; 2; u) = -log(1 - u) / u inside the unit disk."""
        assert np.isclose(hyp2f1(1, 1, 2, 0.5), 2 * math.log(2),
                          atol=accuracy)
        with pytest.raises(ValueError):
            hyp2f1(1, 1, 2, 1.5)
        with pytest.raises(ValueError):
            hyp2f1(1, 1, -2, 0.5)

    @pytest.mark.parametrize(
        "k, coefficients",
        [
            (0, [-1, 0, 2]),
            (half, [Fraction(-1, 2), 0, Fraction(3, 2)]),
        ],
    )
    def test_gegenbauer_classical(self, k, coefficients):
        """Q_2^0 = T_2 and Q_2^(1/2) = P_2."""
        assert gegenbauer_coefficients(2, k) == coefficients
        assert gegenbauer_Q(1, k, Fraction(1, 3)) == Fraction(1, 3)
        assert gegenbauer_Q(5, k, 1) == 1

    def test_gegenbauer_negative_degree(self):
        """Degrees must be nonnegative."""
        with pytest.raises(ValueError):
            gegenbauer_Q(-1, half, 0)

    @pytest.mark.parametrize("alpha", [-half, 0, half, Fraction(3, 2), 2.3])
    def test_bessel(self, alpha):
        """j_alpha(z) = Gamma(alpha + 1) (2/z)^alpha J_alpha(z)."""
        for z in [0.3, 1.7, 6.0]:
            expected = gamma(float(alpha) + 1) * (2 / z) ** float(
                alpha
            ) * jv(float(alpha), z)
            assert np.isclose(bessel_j(alpha, z), expected, atol=accuracy)

    def test_bessel_domain(self):
        """Index and argument range."""
        assert np.isclose(bessel_j(half, 1.3), math.sin(1.3) / 1.3,
                          atol=accuracy)
        with pytest.raises(ValueError):
            bessel_j(-1, 1.0)
        with pytest.raises(ValueError):
            bessel_j(half, 500.0)

    @pytest.mark.parametrize("z", [30.0, 80.0, 150.0, -150.0])
    def test_bessel_large_argument(self, z):
        """The series keeps full accuracy where its terms reach e^|z|."""
        assert np.isclose(bessel_j(half, z), math.sin(z) / z, atol=accuracy)
        expected = gamma(2.5) * (2 / abs(z)) ** 1.5 * jv(1.5, abs(z))
        assert np.isclose(
            bessel_j(Fraction(3, 2), z), expected, atol=accuracy
        )


class TestOracles:
    """Tests the A1 engine against the closed formulas."""

    def test_closed_E_hand_value(self):
        """G(-1 - k, .) = 3/4 e^-1 + 1/4 e^1 at k = 1/2."""
        assert closed_E_trig(-1, half) == TrigPoly(
            1, {(-1,): Fraction(3, 4), (1,): Fraction(1, 4)}
        )
        R = build_root_system("A", 1)
        for n in [-3, 0, 2]:
            t = 0.4
            assert np.isclose(
                eval_trig(R, closed_E_trig(n, half), line_to_point(t)),
                closed_E(n, half, t),
                atol=accuracy,
            )

    @pytest.mark.parametrize(
        "k", [Fraction(0), half, Fraction(1), Fraction(2)]
    )
    def test_e_oracle(self, k):
        """E_n / c_n equals the closed formula exactly."""
        R = build_root_system("A", 1)
        solver = HeckmanOpdam(R, Multiplicity(R, k))
        for n in range(-5, 6):
            assert e_oracle_defect(solver, n).is_zero(), n

    def test_f_oracle(self):
        """F(n + k, z) = Q_n^k(cosh z)."""
        R = build_root_system("A", 1)
        solver = HeckmanOpdam(R, Multiplicity(R, Fraction(3, 2)))
        table = f_oracle_table(solver, 5, [-1.2, 0.0, 0.5, 1.9])
        assert len(table.rows) == 24
        for row in table.rows:
            assert relative_error(row) < accuracy, row

    def test_f_oracle_large_values(self):
        """Relative agreement where F is far above the float resolution."""
        R = build_root_system("A", 1)
        solver = HeckmanOpdam(R, Multiplicity(R, 0))
        # F(8, 2) = cosh 16 at k = 0.
        table = f_oracle_table(solver, 8, [-1.95, 2.0])
        assert max(abs(row["reference"]) for row in table.rows) > 1e6
        for row in table.rows:
            assert relative_error(row) < accuracy, row
        result = rankone_agreement([Fraction(0), half], 8)
        assert result.passed, result.failures

    def test_bessel_limit(self):
        """Q_n^k(cos(z/n)) tends to j_{k-1/2}(z)."""
        table = bessel_limit_table(half, [1.0, 2.5], [4, 16, 64])
        assert table.max_error(64) < table.max_error(4)
        assert table.max_error(64) < 1e-2
        # T_n(cos(z / n)) = cos z.
        table = bessel_limit_table(0, [1.0, 2.5], [3, 7])
        assert table.max_error(7) < accuracy

    def test_rank_one_only(self):
        """Oracles reject other root systems."""
        R = build_root_system("A", 2)
        solver = HeckmanOpdam(R, Multiplicity(R, half))
        with pytest.raises(hodunkl.ConfigurationError):
            e_oracle_defect(solver, 1)

    def test_line_to_point(self):
        """t on the line has root coordinate t/2."""
        assert line_to_point(1) == (half,)
        assert line_to_point(0.5) == (0.25,)
