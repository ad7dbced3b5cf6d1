from fractions import Fraction
import json

import hodunkl
from hodunkl.algebra import MultiPoly, monomial_basis
from hodunkl.dunkl import (
    DunklIntertwiner,
    IntertwinerStage,
    KernelSeries,
    apply_dunkl,
    bessel_JW,
    expw_truncated,
    homogeneous_term,
    kernel_series,
    kernel_symmetry_defect,
    v_moment,
)
from hodunkl.rankone import bessel_j
from hodunkl.rootsystems import Multiplicity, build_root_system
import numpy as np
import pytest

# Accuracy of truncated kernel evaluations against closed forms.
accuracy = 1e-12

# Truncation order used for kernel evaluations at small arguments.
truncation_order = 30

half = Fraction(1, 2)


def _rank_one(k=half, max_degree=64):
    R = build_root_system("A", 1)
    k = Multiplicity(R, k)
    return R, k, DunklIntertwiner(R, k, max_degree)


class TestDunklOperators:
    """Tests the rational Dunkl operators."""

    def test_rank_one(self):
        """T u = 1 + 2k and T u^2 = 2u in root coordinates."""
        R, k, _ = _rank_one()
        u = MultiPoly.variable(1, 0)
        assert apply_dunkl(R, k, (1,), u) == MultiPoly.constant(1, 2)
        assert apply_dunkl(R, k, (1,), u * u) == u * 2

    def test_commute(self):
        """T_xi T_eta = T_eta T_xi on B2."""
        R = build_root_system("B", 2)
        k = Multiplicity(R, {"short": half, "long": Fraction(3)})
        p = MultiPoly(2, {(3, 1): 1, (2, 0): -2, (1, 2): Fraction(1, 3)})
        xi, eta = (1, 0), (0, 1)
        assert apply_dunkl(R, k, xi, apply_dunkl(R, k, eta, p)) == (
            apply_dunkl(R, k, eta, apply_dunkl(R, k, xi, p))
        )


class TestIntertwiner:
    """Tests the stage by stage construction of V."""

    def test_rank_one_values(self):
        """V u^n is the known scalar multiple of u^n on A1."""
        R, k, V = _rank_one()
        # (1/2)_m / (k + 1/2)_m and (1/2)_{m+1} / (k + 1/2)_{m+1}.
        assert V.build_intertwiner(1) is V.stage(1)
        assert V.stage(1).matrix == [[half]]
        assert V.stage(2).matrix == [[half]]
        assert V.stage(3).matrix == [[Fraction(3, 8)]]
        assert V.stage(4).matrix == [[Fraction(3, 8)]]

    @pytest.mark.parametrize("code", ["A2", "B2", "G2"])
    def test_intertwining(self, code):
        """T_alpha V = V d_alpha on all monomials up to degree 4."""
        R = hodunkl.root_system_from_code(code)
        k = Multiplicity(R, Fraction(1, 3))
        V = DunklIntertwiner(R, k)
        assert V.apply(MultiPoly.constant(2, 1)) == MultiPoly.constant(2, 1)
        for degree in range(1, 5):
            for exponents in monomial_basis(2, degree):
                monomial = MultiPoly.monomial(exponents)
                image = V.stage(degree).apply(monomial)
                for alpha in R.simple_roots:
                    assert apply_dunkl(R, k, alpha, image) == V.apply(
                        monomial.derivative(alpha)
                    )

    def test_identity_at_zero(self):
        """For k = 0 every stage is the identity."""
        R = build_root_system("A", 2)
        V = DunklIntertwiner(R, Multiplicity(R, 0))
        for degree in range(5):
            assert V.stage(degree).is_identity()

    def test_max_degree(self):
        """Stages beyond the maximum degree are a resource limit."""
        _, _, V = _rank_one(max_degree=3)
        V.stage(3)
        with pytest.raises(hodunkl.ResourceLimitError):
            V.stage(4)

    def test_wrong_degree(self):
        """A stage only acts on its own degree."""
        _, _, V = _rank_one()
        with pytest.raises(ValueError):
            V.stage(2).apply(MultiPoly.variable(1, 0))

    def test_json(self):
        """Stage JSON keeps the exact matrix."""
        R = build_root_system("B", 2)
        V = DunklIntertwiner(R, Multiplicity(R, {"short": 1, "long": half}))
        stage = V.stage(3)
        restored = IntertwinerStage.from_json(
            json.loads(json.dumps(stage.to_json()))
        )
        assert restored.matrix == stage.matrix
        assert restored.basis == stage.basis


class TestKernel:
    """Tests Exp_W, J_W and the moments of V."""

    def test_free_kernel(self):
        """At k = 0, Exp_W(x, z) = e^<x, z>."""
        _, _, V = _rank_one(k=0)
        # <x, z> = 4 * 1/2 * 1/4 = 1/2.
        value, tail = expw_truncated(V, (half,), (Fraction(1, 4),),
                                     truncation_order)
        assert np.isclose(value, np.exp(0.5), atol=accuracy)
        assert tail < accuracy

        R = build_root_system("A", 2)
        V = DunklIntertwiner(R, Multiplicity(R, 0))
        x, z = (half, Fraction(1, 3)), (Fraction(1, 4), -half)
        pairing = float(R.inner(x, z))
        value, _ = expw_truncated(V, x, z, truncation_order)
        assert np.isclose(value, np.exp(pairing), atol=accuracy)

    @pytest.mark.parametrize("k", [half, Fraction(1), Fraction(2)])
    def test_rank_one_bessel(self, k):
        """J_W(x, z) = j_{k - 1/2}(i <x, z>) on A1."""
        _, _, V = _rank_one(k=k)
        value = bessel_JW(V, (half,), (Fraction(1, 4),), truncation_order)
        assert np.isclose(value, bessel_j(k - half, 0.5j), atol=accuracy)

    def test_rank_one_kernel(self):
        """Exp_W = j_{k-1/2}(is) + s / (2k + 1) j_{k+1/2}(is) on A1."""
        k = half
        _, _, V = _rank_one(k=k)
        s = 0.5
        expected = bessel_j(k - half, 1j * s) + s / (2 * k + 1) * bessel_j(
            k + half, 1j * s
        )
        value, _ = expw_truncated(V, (half,), (Fraction(1, 4),),
                                  truncation_order)
        assert np.isclose(value, complex(expected), atol=accuracy)

    def test_exact_terms(self):
        """Homogeneous terms and moments are exact for rational data."""
        _, _, V = _rank_one()
        x = z = (half,)
        # <x, z> = 1, V(<., z>) = <., z> / 2, V(<., z>^2) = <., z>^2 / 2.
        assert homogeneous_term(V, x, z, 1) == half
        assert v_moment(V, x, z, 1) == half
        assert v_moment(V, x, z, 2) == half
        assert v_moment(V, x, z, 0) == 1

    def test_symmetry(self):
        """Both expansions of the kernel agree exactly on B2."""
        R = build_root_system("B", 2)
        V = DunklIntertwiner(R, Multiplicity(R, {"short": half, "long": 2}))
        x = (Fraction(1, 3), Fraction(-1, 2))
        for defect in kernel_symmetry_defect(V, x, 5):
            assert defect.is_zero()

    def test_series_eigen_recursion(self):
        """T_xi h_m = <x, xi> h_{m-1} for the pieces of the kernel."""
        R = build_root_system("B", 2)
        k = Multiplicity(R, {"short": 1, "long": half})
        V = DunklIntertwiner(R, k)
        x = (half, Fraction(-1, 3))
        series = kernel_series(V, x, 6)
        for xi in [(1, 0), (0, 1)]:
            for m in range(1, 7):
                assert apply_dunkl(R, k, xi, series.homogeneous[m]) == (
                    series.homogeneous[m - 1].scale(R.inner(x, xi))
                )

    def test_dilation(self):
        """Exp_W(r x, z) = Exp_W(x, r z), piece by piece."""
        R = build_root_system("A", 2)
        V = DunklIntertwiner(R, Multiplicity(R, Fraction(3, 2)))
        x, z, r = (half, Fraction(1, 3)), (Fraction(-1, 4), 1), Fraction(5, 3)
        for m in range(6):
            assert homogeneous_term(
                V, tuple(r * c for c in x), z, m
            ) == homogeneous_term(V, x, tuple(r * c for c in z), m)

    def test_series(self):
        """The kernel series in z matches direct evaluation."""
        R = build_root_system("A", 2)
        V = DunklIntertwiner(R, Multiplicity(R, 1))
        x, z = (half, Fraction(1, 4)), (Fraction(1, 5), Fraction(-1, 3))
        series = kernel_series(V, x, 12)
        assert series.truncation_order == 12
        direct, _ = expw_truncated(V, x, z, 12)
        assert np.isclose(series.evaluate(z)[0], direct, atol=accuracy)
        restored = KernelSeries.from_json(series.to_json())
        assert restored.homogeneous == series.homogeneous
