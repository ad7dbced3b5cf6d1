"""
Discrete probability measures built from normalized E-coefficients.

mu_lambda^n puts the mass b_{n lambda, nu} on the point nu / n. For rational
lambda these measures live in the fixed compact set C(lambda), so their
moments determine any limit; convergence is therefore studied through
moments and kernel values only.
"""

from fractions import Fraction

from hodunkl.common.exceptions import InvariantViolation
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
    fraction_to_json,
)


class DiscreteMeasure(JSONSerializable):
    """
    Finitely supported measure with exact rational weights.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system providing the inner product.

    atoms : dict
        Map point (tuple of Fraction, simple-root coordinates) -> weight.
    """

    def __init__(self, root_system, atoms=None):
        super(DiscreteMeasure, self).__init__()
        self.root_system = root_system
        self.atoms = {}
        for point, weight in (atoms or {}).items():
            point = tuple(Fraction(x) for x in point)
            weight = Fraction(weight)
            if weight != 0:
                self.atoms[point] = self.atoms.get(point, 0) + weight

    @classmethod
    def dirac(cls, root_system, point):
        """Return the point mass at a point."""
        return cls(root_system, {tuple(point): 1})

    @property
    def total_mass(self):
        """Exact total mass."""
        return sum(self.atoms.values(), Fraction(0))

    def is_probability(self):
        """Return True if all weights are nonnegative and the mass is 1."""
        return self.total_mass == 1 and all(
            w >= 0 for w in self.atoms.values()
        )

    def support(self):
        """Return the atoms, sorted."""
        return sorted(self.atoms)

    def moment(self, direction, order):
        """
        Return the exact moment sum_atoms w <xi, z>^m.

        Parameters
        ----------
        direction : sequence of Fraction
            Direction z in simple-root coordinates.

        order : int
            Order m.

        Returns
        -------
        moment : Fraction
            The moment.
        """
        return sum(
            (
                w * self.root_system.inner(point, direction) ** order
                for point, w in self.atoms.items()
            ),
            Fraction(0),
        )

    def integrate(self, polynomial):
        """Return the exact integral of a MultiPoly against the measure."""
        return sum(
            (
                w * polynomial.evaluate(point)
                for point, w in self.atoms.items()
            ),
            Fraction(0),
        )

    def dilate(self, factor):
        """Return the image measure under xi -> r xi."""
        factor = Fraction(factor)
        return DiscreteMeasure(
            self.root_system,
            {
                tuple(factor * x for x in point): w
                for point, w in self.atoms.items()
            },
        )

    def to_json(self):
        """Return the canonical JSON form: sorted atoms with exact data."""
        return {
            "object": "DiscreteMeasure",
            "root_system": self.root_system.code,
            "atoms": [
                {
                    "coords": [fraction_to_json(x) for x in point],
                    "weight": fraction_to_json(self.atoms[point]),
                }
                for point in self.support()
            ],
        }

    @classmethod
    def from_json(cls, json_dict, root_system=None):
        """Read a measure; the root system is rebuilt from its code if None."""
        if root_system is None:
            from hodunkl.rootsystems import root_system_from_code

            root_system = root_system_from_code(json_dict["root_system"])
        return cls(
            root_system,
            {
                tuple(fraction_from_json(x) for x in atom["coords"]):
                fraction_from_json(atom["weight"])
                for atom in json_dict["atoms"]
            },
        )


def measure_approx(solver, weight, n):
    """
    Return mu_lambda^n = sum_nu b_{n lambda, nu} delta_{nu / n}.

    Parameters
    ----------
    solver : hodunkl.cherednik.HeckmanOpdam
        Solver of (R, k).

    weight : tuple of int
        Weight lambda.

    n : int
        Positive scaling factor.

    Returns
    -------
    measure : DiscreteMeasure
        The discrete measure, checked to be a probability measure.
    """
    R = solver.root_system
    epoly = solver.compute_E(tuple(n * c for c in weight))
    scale = Fraction(1, n)
    measure = DiscreteMeasure(
        R,
        {
            tuple(scale * x for x in R.weight_to_point(nu)): b
            for nu, b in epoly.b_coefficients().items()
        },
    )
    if not measure.is_probability():
        raise InvariantViolation(
            "probability_measure",
            "mu"
            + str(tuple(weight))
            + "^"
            + str(n)
            + " is not a probability measure.",
            measure.to_json(),
        )
    return measure


def measure_moment(measure, direction, order):
    """Return the exact m-th moment of a measure in direction z."""
    return measure.moment(direction, order)


def measure_integrate(measure, polynomial):
    """
    Return the exact integral of a polynomial against a measure.

    For the limit measure of x this equals V p(x); for mu_lambda^n it
    approaches V p(lambda) as n grows.
    """
    return measure.integrate(polynomial)


def support_check(measure, weight):
    """
    Return True if every atom lies in C(lambda).

    Each atom is tested with both hull criteria, which must agree.
    """
    return all(
        measure.root_system.hull_contains(weight, point)
        for point in measure.support()
    )
