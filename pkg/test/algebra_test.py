from fractions import Fraction
import math

import hodunkl
from hodunkl.algebra import (
    ComplexPoint,
    MultiPoly,
    TrigPoly,
    divided_difference,
    eval_trig,
    monomial_basis,
    reflect_poly,
    rref_solve,
    solve_exact,
)
from hodunkl.rootsystems import build_root_system
import numpy as np
import pytest

# Accuracy of floating point evaluations of trigonometric polynomials.
accuracy = 1e-12


class TestMultiPoly:
    """Tests exact multivariate polynomials."""

    def test_monomial_basis(self):
        """Size and canonical order of the degree-n basis."""
        assert monomial_basis(1, 3) == [(3,)]
        assert monomial_basis(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert len(monomial_basis(3, 4)) == math.comb(6, 2)

    def test_arithmetic(self):
        """Sums, products and powers cancel and collect exactly."""
        u = MultiPoly.variable(2, 0)
        v = MultiPoly.variable(2, 1)
        p = (u + v) ** 2 - u * u - v * v
        assert p == MultiPoly.monomial((1, 1), 2)
        assert (u - u).is_zero()
        assert (u - u).degree == -1
        assert p.degree == 2
        assert (u * Fraction(1, 3)).coefficient((1, 0)) == Fraction(1, 3)
        q = p + u * 3 + 1
        assert q.homogeneous_part(1) == u * 3
        assert q.homogeneous_components()[2] == p

    def test_derivatives(self):
        """Partial and directional derivatives."""
        p = MultiPoly(2, {(2, 1): 3, (0, 1): 1})
        assert p.partial(0) == MultiPoly(2, {(1, 1): 6})
        assert p.derivative((1, 1)) == MultiPoly(
            2, {(1, 1): 6, (2, 0): 3, (0, 0): 1}
        )

    def test_evaluate_and_compose(self):
        """Exact evaluation and linear substitution."""
        p = MultiPoly(2, {(2, 0): 1, (0, 1): -1})
        assert p.evaluate((Fraction(1, 2), 3)) == Fraction(-11, 4)
        swapped = p.compose_linear(((0, 1), (1, 0)))
        assert swapped == MultiPoly(2, {(0, 2): 1, (1, 0): -1})

    def test_divide_by_linear_form(self):
        """p = q * l + r with r free of the eliminated variable."""
        u = MultiPoly.variable(2, 0)
        v = MultiPoly.variable(2, 1)
        form = (1, 2)
        p = (u + v * 2) * (u * 3 - v) + u * u
        quotient, remainder = p.divide_by_linear_form(form)
        assert quotient * MultiPoly.linear_form(form) + remainder == p
        assert all(e[1] == 0 for e, _ in remainder.terms())

    def test_divided_difference(self):
        """(p - p o sigma) / <alpha, .> on A1 and A2."""
        R = build_root_system("A", 1)
        u = MultiPoly.variable(1, 0)
        # <alpha, u alpha> = 4u and sigma(u) = -u.
        assert reflect_poly(R, (1,), u) == -u
        assert divided_difference(R, (1,), u) == MultiPoly.constant(
            1, Fraction(1, 2)
        )
        assert divided_difference(R, (1,), u * u).is_zero()

        R = build_root_system("A", 2)
        for alpha in R.positive_roots:
            p = MultiPoly(2, {(3, 1): 1, (1, 0): 2, (0, 2): -1})
            difference = divided_difference(R, alpha, p)
            form = MultiPoly.linear_form(R.gram_vector(alpha))
            assert difference * form == p - reflect_poly(R, alpha, p)

    def test_json(self):
        """JSON form keeps exact coefficients."""
        p = MultiPoly(2, {(2, 1): Fraction(-3, 7), (0, 0): 5})
        assert MultiPoly.from_json(p.to_json()) == p


class TestTrigPoly:
    """Tests trigonometric polynomials and their evaluation."""

    def test_arithmetic(self):
        """Products add weights, zero terms disappear."""
        f = TrigPoly(1, {(1,): 1, (-1,): 1})
        g = TrigPoly(1, {(1,): 1, (-1,): -1})
        assert f * g == TrigPoly(1, {(2,): 1, (-2,): -1})
        assert (f - f).is_zero()
        assert f.value_at_zero() == 2
        assert f.support() == {(1,), (-1,)}

    def test_act(self):
        """w.e^nu = e^(w nu)."""
        R = build_root_system("A", 2)
        f = TrigPoly(2, {(1, 0): 2, (0, 0): 1})
        s1 = R.weyl_group[1]
        assert f.act(s1) == TrigPoly(2, {(-1, 1): 2, (0, 0): 1})
        total = TrigPoly(2)
        for element in R.weyl_group:
            total = total + f.act(element)
        for element in R.weyl_group:
            assert total.act(element) == total

    def test_eval_trig(self):
        """A1: e^n at root coordinate t/2 equals e^(n t)."""
        R = build_root_system("A", 1)
        f = TrigPoly(1, {(2,): 1, (-1,): Fraction(1, 2)})
        t = 0.3
        value = eval_trig(R, f, (t / 2,))
        assert np.isclose(value, np.exp(2 * t) + 0.5 * np.exp(-t),
                          atol=accuracy)
        purely_imaginary = ComplexPoint((0,), (t / 2,))
        value = eval_trig(R, TrigPoly.exponential((1,)), purely_imaginary)
        assert np.isclose(value, np.exp(1j * t), atol=accuracy)

    def test_overflow(self):
        """Exponents beyond the double range raise OverflowError."""
        R = build_root_system("A", 1)
        with pytest.raises(OverflowError):
            eval_trig(R, TrigPoly.exponential((1000,)), (1,))

    def test_complex_point(self):
        """Validation and exactness of complex points."""
        z = ComplexPoint((Fraction(1, 2), 0))
        assert z.is_real() and z.is_exact()
        assert z.scaled(Fraction(1, 2)).real == (Fraction(1, 4), 0)
        with pytest.raises(ValueError):
            ComplexPoint((float("nan"),))
        with pytest.raises(ValueError):
            ComplexPoint((1, 2), (0,))

    def test_json(self):
        """JSON form keeps exact coefficients."""
        f = TrigPoly(2, {(1, -1): Fraction(2, 3), (0, 0): 1})
        assert TrigPoly.from_json(f.to_json()) == f


class TestLinearAlgebra:
    """Tests the exact solvers."""

    def test_solve_exact(self):
        """Unique solution or None."""
        matrix = [[2, 1], [1, 3]]
        assert solve_exact(matrix, [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]
        assert solve_exact([[1, 2], [2, 4]], [1, 2]) is None
        third = Fraction(1, 3)
        matrix = [[third, 1, 0], [0, 2, -1], [1, 0, Fraction(1, 2)]]
        solution = solve_exact(matrix, [1, 0, 2])
        assert all(isinstance(x, Fraction) for x in solution)
        products = [
            sum(a * x for a, x in zip(row, solution)) for row in matrix
        ]
        assert products == [1, 0, 2]

    def test_rref_solve(self):
        """Overdetermined consistent systems, and the two failure modes."""
        matrix = [[1, 0], [0, 1], [1, 1]]
        rhs = [[1, 2], [2, 0], [3, 2]]
        assert rref_solve(matrix, rhs) == [[1, 2], [2, 0]]
        with pytest.raises(hodunkl.InvariantViolation) as error:
            rref_solve(matrix, [[1], [2], [4]])
        assert error.value.invariant == "consistent_system"
        with pytest.raises(hodunkl.InvariantViolation) as error:
            rref_solve([[1, 1], [2, 2]], [[1], [2]])
        assert error.value.invariant == "full_column_rank"
