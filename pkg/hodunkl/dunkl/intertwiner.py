"""Degree-by-degree construction of Dunkl's intertwining operator V."""

from fractions import Fraction
import threading

from hodunkl.algebra.linear_algebra import rref_solve
from hodunkl.algebra.multipoly import (
    MultiPoly,
    divided_difference,
    monomial_basis,
)
from hodunkl.common.exceptions import ResourceLimitError
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
    fraction_to_json,
)
from hodunkl.common.parallelizer import printout


class IntertwinerStage(JSONSerializable):
    """
    Restriction of V to the homogeneous polynomials of one degree.

    Parameters
    ----------
    degree : int
        Degree n.

    basis : list of tuple
        Exponents of the monomial basis of degree n, in canonical order.

    matrix : list of lists of Fraction
        matrix[i][j] is the coefficient of basis[i] in V(basis[j]).

    root_system_code : str
        Code of the root system.

    multiplicity : dict
        JSON form of the multiplicity.
    """

    def __init__(
        self,
        degree=0,
        basis=None,
        matrix=None,
        root_system_code="A1",
        multiplicity=None,
    ):
        super(IntertwinerStage, self).__init__()
        self.degree = degree
        self.basis = [tuple(e) for e in (basis or [(0,)])]
        self.matrix = matrix if matrix is not None else [[Fraction(1)]]
        self.root_system_code = root_system_code
        self.multiplicity = multiplicity if multiplicity is not None else {}
        self._index = {e: i for i, e in enumerate(self.basis)}

    @property
    def rank(self):
        """Number of variables."""
        return len(self.basis[0])

    def index(self, exponents):
        """Return the position of a monomial in the basis."""
        return self._index[tuple(exponents)]

    def column(self, exponents):
        """Return V(u^exponents) as a MultiPoly."""
        j = self.index(exponents)
        return MultiPoly(
            self.rank,
            {e: self.matrix[i][j] for i, e in enumerate(self.basis)},
        )

    def apply(self, polynomial):
        """
        Apply V to a homogeneous polynomial of this stage's degree.

        Parameters
        ----------
        polynomial : MultiPoly
            Homogeneous polynomial of degree n.

        Returns
        -------
        image : MultiPoly
            V(polynomial).
        """
        terms = {}
        for exponents, coefficient in polynomial.terms():
            if sum(exponents) != self.degree:
                raise ValueError(
                    "Stage "
                    + str(self.degree)
                    + " cannot act on a monomial of degree "
                    + str(sum(exponents))
                    + "."
                )
            j = self.index(exponents)
            for i, e in enumerate(self.basis):
                value = self.matrix[i][j]
                if value != 0:
                    terms[e] = terms.get(e, 0) + coefficient * value
        return MultiPoly(self.rank, terms)

    def is_identity(self):
        """Return True if V acts as the identity on this degree."""
        return all(
            self.matrix[i][j] == (1 if i == j else 0)
            for i in range(len(self.basis))
            for j in range(len(self.basis))
        )

    def to_json(self):
        """Return the exact JSON form of the stage."""
        return {
            "object": "IntertwinerStage",
            "root_system": self.root_system_code,
            "multiplicity": self.multiplicity,
            "degree": self.degree,
            "basis": [list(e) for e in self.basis],
            "matrix": [
                [fraction_to_json(x) for x in row] for row in self.matrix
            ],
        }

    @classmethod
    def from_json(cls, json_dict):
        """Read a stage from its JSON form."""
        return cls(
            degree=json_dict["degree"],
            basis=[tuple(e) for e in json_dict["basis"]],
            matrix=[
                [fraction_from_json(x) for x in row]
                for row in json_dict["matrix"]
            ],
            root_system_code=json_dict["root_system"],
            multiplicity=json_dict["multiplicity"],
        )


class DunklIntertwiner:
    """
    The intertwining operator V for one (R, k), built degree by degree.

    V is the unique degree-preserving linear map with V(1) = 1 and
    T_xi V = V d_xi. On degree n, V p is the unique q solving
    T_alpha_j q = V(d_alpha_j p) for j = 1..r, where the right hand side
    only involves the stage of degree n - 1. The stacked system is
    overdetermined; it is reduced exactly and its consistency and full
    column rank are checked.

    Stages are cached; building is sequential in the degree and guarded by
    a lock, so one instance can be shared between threads.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    multiplicity : hodunkl.rootsystems.Multiplicity
        Multiplicity k.

    max_degree : int
        Largest degree a stage may be built for.
    """

    def __init__(self, root_system, multiplicity, max_degree=64):
        self.root_system = root_system
        self.multiplicity = multiplicity
        self.max_degree = max_degree
        self._lock = threading.Lock()
        self._values_lock = threading.Lock()
        self._values = {}
        self._stages = [
            IntertwinerStage(
                0,
                [(0,) * root_system.rank],
                [[Fraction(1)]],
                root_system.code,
                multiplicity.to_json(),
            )
        ]

    def stage(self, degree):
        """
        Return the stage of a given degree, building missing stages.

        Parameters
        ----------
        degree : int
            Degree n.

        Returns
        -------
        stage : IntertwinerStage
            V restricted to degree n.
        """
        if degree > self.max_degree:
            raise ResourceLimitError(
                "Intertwiner stage "
                + str(degree)
                + " exceeds the maximum stage degree "
                + str(self.max_degree)
                + "."
            )
        with self._lock:
            while len(self._stages) <= degree:
                self._stages.append(self._build_stage(len(self._stages)))
            return self._stages[degree]

    build_intertwiner = stage

    def values_at(self, point, degree):
        """
        Return V(u^e)(x) for all monomials u^e of one degree.

        Values are memoized per (x, degree), since kernel evaluations reuse
        them for every z.

        Parameters
        ----------
        point : sequence of Fraction
            Rational point x in simple-root coordinates.

        degree : int
            Degree m.

        Returns
        -------
        values : tuple of Fraction
            Exact values, in the order of the stage basis.
        """
        key = (tuple(Fraction(x) for x in point), degree)
        with self._values_lock:
            if key in self._values:
                return self._values[key]
        stage = self.stage(degree)
        monomials = [
            MultiPoly.monomial(e).evaluate(key[0]) for e in stage.basis
        ]
        values = tuple(
            sum(
                (
                    m * stage.matrix[i][j]
                    for i, m in enumerate(monomials)
                    if m != 0
                ),
                Fraction(0),
            )
            for j in range(len(stage.basis))
        )
        with self._values_lock:
            return self._values.setdefault(key, values)

    def apply(self, polynomial):
        """Apply V to an arbitrary polynomial."""
        result = MultiPoly(polynomial.rank)
        for degree, component in polynomial.homogeneous_components().items():
            result = result + self.stage(degree).apply(component)
        return result

    def _build_stage(self, degree):
        R = self.root_system
        basis = monomial_basis(R.rank, degree)
        lower = self._stages[degree - 1]
        size = len(lower.basis)
        printout(
            "Building intertwiner stage",
            degree,
            "for",
            R.code,
            "with",
            len(basis),
            "unknowns",
            min_verbosity=2,
        )

        weighted_roots = []
        for alpha in R.positive_roots:
            k = self.multiplicity.value(alpha)
            if k != 0:
                weighted_roots.append(
                    (alpha, [k * R.inner(alpha, s) for s in R.simple_roots])
                )

        # Rows (j, m): coefficient of u^m in T_alpha_j applied to the unknown.
        system = [[Fraction(0)] * len(basis) for _ in range(R.rank * size)]
        for column, exponents in enumerate(basis):
            monomial = MultiPoly.monomial(exponents)
            differences = [
                (divided_difference(R, alpha, monomial), factors)
                for alpha, factors in weighted_roots
            ]
            for j in range(R.rank):
                image = monomial.partial(j)
                for difference, factors in differences:
                    if factors[j] != 0:
                        image = image + difference.scale(factors[j])
                for m, c in image.terms():
                    system[j * size + lower.index(m)][column] = c

        # Right hand sides V(d_alpha_j u^e) = e_j V(u^(e - 1_j)).
        right_hand_sides = [
            [Fraction(0)] * len(basis) for _ in range(R.rank * size)
        ]
        for column, exponents in enumerate(basis):
            for j in range(R.rank):
                if exponents[j] == 0:
                    continue
                lowered = list(exponents)
                lowered[j] -= 1
                source = lower.index(lowered)
                for i in range(size):
                    value = lower.matrix[i][source]
                    if value != 0:
                        right_hand_sides[j * size + i][column] = (
                            exponents[j] * value
                        )

        matrix = rref_solve(
            system,
            right_hand_sides,
            context="(intertwiner degenerate at degree " + str(degree) + ")",
        )
        return IntertwinerStage(
            degree,
            basis,
            matrix,
            R.code,
            self.multiplicity.to_json(),
        )
