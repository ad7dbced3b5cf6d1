from fractions import Fraction
import io

import hodunkl
from hodunkl.algebra import MultiPoly
from hodunkl.cherednik import HeckmanOpdam
from hodunkl.dunkl import DunklIntertwiner, v_moment
from hodunkl.limits import (
    ConvergenceTable,
    DiscreteMeasure,
    kernel_bound_check,
    measure_approx,
    measure_integrate,
    measure_moment,
    moment_convergence,
    scaling_error_table,
    support_check,
    symmetric_error_table,
)
from hodunkl.rootsystems import Multiplicity, build_root_system
import pandas as pd
import pytest

# Accuracy for evaluations where approximation and limit coincide.
accuracy = 1e-12

# Truncation order of the kernel series.
truncation_order = 30

half = Fraction(1, 2)
quarter = Fraction(1, 4)


def _setup(code="A1", k=half, **kwargs):
    R = hodunkl.root_system_from_code(code)
    k = Multiplicity(R, k)
    return R, HeckmanOpdam(R, k, **kwargs), DunklIntertwiner(R, k)


class TestDiscreteMeasure:
    """Tests exact discrete measures."""

    def test_basics(self):
        """Mass, moments, integrals and dilations."""
        R = build_root_system("A", 1)
        measure = DiscreteMeasure(
            R, {(-half,): Fraction(3, 4), (half,): quarter, (0,): 0}
        )
        assert measure.support() == [(-half,), (half,)]
        assert measure.is_probability()
        # <x, z> = 4 x z, so <(+-1/2), (1/2)> = +-1.
        assert measure.moment((half,), 1) == -half
        assert measure.moment((half,), 2) == 1
        u = MultiPoly.variable(1, 0)
        assert measure.integrate(u * u) == quarter
        assert measure.dilate(2).support() == [(-1,), (1,)]
        assert not DiscreteMeasure(R, {(0,): half}).is_probability()
        assert DiscreteMeasure.dirac(R, (1,)).moment((1,), 3) == 64

    def test_json(self):
        """JSON keeps exact atoms and rebuilds the root system."""
        R = build_root_system("B", 2)
        atoms = {(half, 0): Fraction(2, 3), (0, -half): Fraction(1, 3)}
        measure = DiscreteMeasure(R, atoms)
        restored = DiscreteMeasure.from_json(measure.to_json())
        assert restored.atoms == measure.atoms
        assert restored.root_system.code == "B2"


class TestMeasureApprox:
    """Tests the measures mu_lambda^n."""

    def test_rank_one(self):
        """mu_{-1}^1 has masses 3/4 and 1/4 at -1/2 and 1/2."""
        R, solver, _ = _setup()
        measure = measure_approx(solver, (-1,), 1)
        assert measure.atoms == {(-half,): Fraction(3, 4), (half,): quarter}
        measure = measure_approx(solver, (-1,), 2)
        assert measure.is_probability()
        assert measure.atoms[(-half,)] > 0

    @pytest.mark.parametrize("code", ["A2", "B2"])
    def test_support(self, code):
        """Atoms of mu_lambda^n lie in C(lambda)."""
        R, solver, _ = _setup(code)
        for weight in [(1, 0), (-1, 1)]:
            for n in [1, 2, 3]:
                measure = measure_approx(solver, weight, n)
                assert measure.is_probability()
                assert support_check(measure, weight)

    def test_zero_multiplicity(self):
        """At k = 0 the measure is the point mass at lambda."""
        R, solver, V = _setup("A2", 0)
        weight = (1, -1)
        measure = measure_approx(solver, weight, 4)
        assert measure.atoms == {R.weight_to_point(weight): 1}
        direction = (half, quarter)
        assert measure_moment(measure, direction, 2) == v_moment(
            V, R.weight_to_point(weight), direction, 2
        )
        p = MultiPoly(2, {(2, 1): 3, (0, 1): -1, (0, 0): 2})
        assert measure_integrate(measure, p) == V.apply(p).evaluate(
            R.weight_to_point(weight)
        )


class TestConvergenceTables:
    """Tests the scaling experiments."""

    def test_free_limit(self):
        """At k = 0 every level equals the limit."""
        R, solver, V = _setup(k=0)
        z_grid = [(quarter,), (-half,)]
        table = scaling_error_table(
            solver, V, (1,), z_grid, [1, 2, 4], truncation_order
        )
        assert len(table.rows) == 6
        for n in [1, 2, 4]:
            assert table.max_error(n) < accuracy

    def test_rank_one_convergence(self):
        """E_{n lambda}(z / n) / c tends to Exp_W(lambda, z)."""
        R, solver, V = _setup()
        z = (quarter,)
        table = scaling_error_table(
            solver, V, (1,), [z], [2, 4, 8, 16], truncation_order
        )
        errors = table.errors(z)
        assert errors[16] < errors[2]
        assert errors[16] < 0.1

        table = symmetric_error_table(
            solver, V, (1,), [z], [2, 4, 8, 16], truncation_order
        )
        errors = table.errors(z)
        assert errors[16] < errors[2]
        assert table.title == "jw"

    def test_moments(self):
        """Moment rows are exact and converge."""
        R, solver, V = _setup()
        table = moment_convergence(solver, V, (-1,), (half,), 2, [1, 2, 4, 8])
        assert table.title == "moment2"
        errors = table.errors()
        assert errors[8] < errors[1]
        assert all(row["tail"] == 0.0 for row in table.rows)

    def test_resource_limit_rows(self):
        """Levels above the downset limit stay in the table as skipped."""
        R, solver, V = _setup(downset_size_limit=3)
        table = scaling_error_table(
            solver, V, (1,), [(quarter,)], [1, 8], truncation_order
        )
        statuses = [row["status"] for row in table.rows]
        assert statuses == ["ok", "resource_limit"]
        assert table.rows[1]["error"] is None
        assert set(table.errors()) == {1}

    def test_kernel_bounds(self):
        """Exp_W(lambda, z) lies between the extreme exponentials."""
        for code, weight, z in [
            ("A1", (1,), (half,)),
            ("A2", (1, 1), (half, -quarter)),
            ("B2", (1, 0), (quarter, quarter)),
        ]:
            R, _, V = _setup(code)
            result = kernel_bound_check(V, weight, z, truncation_order)
            assert result["passed"], result
            assert result["lower"] <= result["upper"]

    def test_table_output(self):
        """CSV and JSON forms of a table."""
        table = ConvergenceTable("moment1")
        table.add_row(2, (half,), Fraction(1, 3), quarter)
        table.add_row(4, (half,), None, None, status="resource_limit")
        assert table.rows[0]["error"] == pytest.approx(1 / 12)
        frame = pd.read_csv(io.StringIO(table.to_csv()))
        assert list(frame.columns) == ConvergenceTable.columns
        assert list(frame["status"]) == ["ok", "resource_limit"]
        document = table.to_json()
        assert document["rows"][0]["approx"] == pytest.approx(1 / 3)
        restored = ConvergenceTable.from_json(document)
        assert restored.title == "moment1"
        assert restored.errors() == {2: pytest.approx(1 / 12)}
