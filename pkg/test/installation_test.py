import hodunkl
from hodunkl.algebra import TrigPoly


class TestInstallation:
    """Verifies the installation."""

    def test_installation(self):
        """Test the hodunkl installation."""
        test_parameters = hodunkl.Parameters()
        run_config = test_parameters.to_run_config()
        R = hodunkl.root_system_from_code(run_config.root_system_code)
        k = hodunkl.Multiplicity(R, run_config.multiplicity)
        solver = hodunkl.HeckmanOpdam.from_run_config(run_config, R, k)
        intertwiner = hodunkl.DunklIntertwiner(R, k)

        # If this test fails, then it will throw an exception way before.
        assert solver.compute_E(run_config.weight).coefficients == (
            TrigPoly.exponential(run_config.weight)
        )
        assert intertwiner.stage(1).degree == 1

    def test_scientific_stack(self):
        """Test whether the scientific dependencies import."""
        import mpmath
        import numpy
        import pandas
        import scipy.special
        import sympy
        import tqdm

        assert sympy.Rational(1, 2) + sympy.Rational(1, 2) == 1
        assert numpy.isclose(float(mpmath.mpf(1) / 4), 0.25)
