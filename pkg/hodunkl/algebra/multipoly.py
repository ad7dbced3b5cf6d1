"""Sparse multivariate polynomials with exact rational coefficients."""

from fractions import Fraction
import itertools

from hodunkl.common.exceptions import InvariantViolation
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
    fraction_to_json,
)


def monomial_basis(rank, degree):
    """
    Return the exponents of all monomials of a given total degree.

    The order is descending lexicographic, which is the canonical order of
    all per-degree matrices in hodunkl.

    Parameters
    ----------
    rank : int
        Number of variables.

    degree : int
        Total degree.

    Returns
    -------
    basis : list of tuple
        Exponent tuples.
    """
    if rank == 0:
        return [()] if degree == 0 else []
    basis = []
    for positions in itertools.combinations_with_replacement(
        range(rank), degree
    ):
        exponents = [0] * rank
        for p in positions:
            exponents[p] += 1
        basis.append(tuple(exponents))
    return sorted(set(basis), reverse=True)


class MultiPoly(JSONSerializable):
    """
    Polynomial on a, in the simple-root coordinate functions u_1..u_r.

    A point x of a is written x = sum_i u_i alpha_i; a monomial is stored as
    its exponent tuple. Zero coefficients are never stored.

    Parameters
    ----------
    rank : int
        Number of variables.

    terms : dict
        Map exponent tuple -> coefficient (anything Fraction accepts).
    """

    __hash__ = None

    def __init__(self, rank=1, terms=None):
        super(MultiPoly, self).__init__()
        self.rank = rank
        self._terms = {}
        if terms is not None:
            for exponents, coefficient in terms.items():
                exponents = tuple(int(e) for e in exponents)
                if len(exponents) != rank or min(exponents, default=0) < 0:
                    raise ValueError(
                        "Invalid exponent " + str(exponents) + " for rank "
                        + str(rank)
                    )
                coefficient = Fraction(coefficient)
                if coefficient != 0:
                    self._terms[exponents] = (
                        self._terms.get(exponents, 0) + coefficient
                    )
            self._terms = {e: c for e, c in self._terms.items() if c != 0}

    @classmethod
    def _from_clean(cls, rank, terms):
        # terms is trusted: tuple keys, Fraction values, no zeros.
        new = cls.__new__(cls)
        new.rank = rank
        new._terms = terms
        return new

    @classmethod
    def constant(cls, rank, value=1):
        """Return the constant polynomial with the given value."""
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def variable(cls, rank, index):
        """Return the coordinate function u_index."""
        exponents = [0] * rank
        exponents[index] = 1
        return cls(rank, {tuple(exponents): 1})

    @classmethod
    def monomial(cls, exponents, coefficient=1):
        """Return coefficient * u^exponents."""
        return cls(len(exponents), {tuple(exponents): coefficient})

    @classmethod
    def linear_form(cls, coefficients):
        """Return sum_i coefficients[i] * u_i."""
        rank = len(coefficients)
        terms = {}
        for i, c in enumerate(coefficients):
            exponents = [0] * rank
            exponents[i] = 1
            terms[tuple(exponents)] = c
        return cls(rank, terms)

    ##############################
    # Properties
    ##############################

    @property
    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_zero(self):
        """Return True for the zero polynomial."""
        return len(self._terms) == 0

    def terms(self):
        """Return (exponents, coefficient) pairs in canonical order."""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponents):
        """Return the coefficient of u^exponents."""
        return self._terms.get(tuple(exponents), Fraction(0))

    def homogeneous_part(self, degree):
        """Return the homogeneous component of the given degree."""
        return MultiPoly._from_clean(
            self.rank,
            {e: c for e, c in self._terms.items() if sum(e) == degree},
        )

    def homogeneous_components(self):
        """Return a dict degree -> homogeneous component."""
        components = {}
        for e, c in self._terms.items():
            components.setdefault(sum(e), {})[e] = c
        return {
            d: MultiPoly._from_clean(self.rank, t)
            for d, t in sorted(components.items())
        }

    ##############################
    # Arithmetic
    ##############################

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.rank != self.rank:
                raise ValueError("Polynomials of different rank.")
            return other
        return MultiPoly.constant(self.rank, other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            value = terms.get(e, 0) + c
            if value == 0:
                terms.pop(e, None)
            else:
                terms[e] = value
        return MultiPoly._from_clean(self.rank, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly._from_clean(
            self.rank, {e: -c for e, c in self._terms.items()}
        )

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, factor):
        """Return factor * self for an exact scalar factor."""
        factor = Fraction(factor)
        if factor == 0:
            return MultiPoly._from_clean(self.rank, {})
        return MultiPoly._from_clean(
            self.rank, {e: c * factor for e, c in self._terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            return self.scale(other)
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly._from_clean(
            self.rank, {e: c for e, c in terms.items() if c != 0}
        )

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Only nonnegative integer powers are supported.")
        result = MultiPoly.constant(self.rank, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.rank == other.rank and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == MultiPoly.constant(self.rank, other)
        return NotImplemented

    ##############################
    # Calculus and substitutions
    ##############################

    def partial(self, index):
        """Return the partial derivative with respect to u_index."""
        terms = {}
        for e, c in self._terms.items():
            if e[index] > 0:
                lowered = e[:index] + (e[index] - 1,) + e[index + 1 :]
                terms[lowered] = c * e[index]
        return MultiPoly._from_clean(self.rank, terms)

    def derivative(self, direction):
        """
        Return the directional derivative along a direction of a.

        Parameters
        ----------
        direction : sequence of Fraction
            Direction xi in simple-root coordinates; since x = sum u_i
            alpha_i, moving along xi moves u by xi.

        Returns
        -------
        derivative : MultiPoly
            sum_i xi_i * (d/du_i) self.
        """
        result = MultiPoly._from_clean(self.rank, {})
        for i, xi in enumerate(direction):
            if xi != 0:
                result = result + self.partial(i).scale(xi)
        return result

    def compose_linear(self, matrix):
        """
        Return the polynomial u -> self(M u) for an exact r x r matrix M.

        Parameters
        ----------
        matrix : sequence of sequences
            Matrix M acting on simple-root coordinates.

        Returns
        -------
        composed : MultiPoly
            self o M.
        """
        rows = [MultiPoly.linear_form(row) for row in matrix]
        powers = [[MultiPoly.constant(self.rank, 1)] for _ in rows]

        def power(i, p):
            while len(powers[i]) <= p:
                powers[i].append(powers[i][-1] * rows[i])
            return powers[i][p]

        result = MultiPoly._from_clean(self.rank, {})
        for e, c in self._terms.items():
            term = MultiPoly.constant(self.rank, c)
            for i, p in enumerate(e):
                if p > 0:
                    term = term * power(i, p)
            result = result + term
        return result

    def evaluate(self, point):
        """
        Evaluate at a point given in simple-root coordinates.

        The result is exact (Fraction) if all coordinates are exact, and a
        Python complex/float otherwise.
        """
        total = 0
        for e, c in self._terms.items():
            value = c
            for x, p in zip(point, e):
                if p:
                    value = value * x**p
            total = total + value
        return total

    def divide_by_linear_form(self, form):
        """
        Divide by the linear form sum_i form[i] u_i.

        The variable with the last nonzero coefficient of the form is
        eliminated term by term, highest power first; what cannot be
        reduced is the remainder, which is free of that variable.

        Parameters
        ----------
        form : sequence of Fraction
            Coefficients of the linear form. Must not vanish.

        Returns
        -------
        quotient, remainder : MultiPoly, MultiPoly
            self = quotient * form + remainder.
        """
        form = [Fraction(f) for f in form]
        pivots = [i for i, f in enumerate(form) if f != 0]
        if not pivots:
            raise ValueError("Cannot divide by the zero linear form.")
        j = pivots[-1]
        lead = form[j]
        remaining = dict(self._terms)
        quotient = {}
        while True:
            top = max((e[j] for e in remaining), default=0)
            if top == 0:
                break
            for e in [e for e in remaining if e[j] == top]:
                c = remaining.pop(e) / lead
                lowered = e[:j] + (top - 1,) + e[j + 1 :]
                quotient[lowered] = quotient.get(lowered, 0) + c
                for i in pivots[:-1]:
                    raised = lowered[:i] + (lowered[i] + 1,) + lowered[i + 1 :]
                    value = remaining.get(raised, 0) - c * form[i]
                    if value == 0:
                        remaining.pop(raised, None)
                    else:
                        remaining[raised] = value
        return (
            MultiPoly._from_clean(
                self.rank, {e: c for e, c in quotient.items() if c != 0}
            ),
            MultiPoly._from_clean(self.rank, remaining),
        )

    ##############################
    # Serialization
    ##############################

    def to_json(self):
        """Return the canonical JSON form (sorted list of terms)."""
        return {
            "rank": self.rank,
            "terms": [
                dict(exponents=list(e), **fraction_to_json(c))
                for e, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, json_dict):
        """Read a polynomial from its canonical JSON form."""
        return cls(
            json_dict["rank"],
            {
                tuple(t["exponents"]): fraction_from_json(t)
                for t in json_dict["terms"]
            },
        )

    def __repr__(self):
        if not self._terms:
            return "MultiPoly(0)"
        parts = []
        for e, c in self.terms():
            monomial = "*".join(
                "u%d^%d" % (i + 1, p) if p > 1 else "u%d" % (i + 1)
                for i, p in enumerate(e)
                if p > 0
            )
            parts.append(str(c) + ("*" + monomial if monomial else ""))
        return "MultiPoly(" + " + ".join(parts) + ")"


def reflect_poly(root_system, root, polynomial):
    """
    Return p o sigma_alpha.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system containing the root.

    root : tuple of int
        Root alpha in simple-root coordinates.

    polynomial : MultiPoly
        Polynomial p.

    Returns
    -------
    reflected : MultiPoly
        The polynomial x -> p(sigma_alpha(x)).
    """
    return polynomial.compose_linear(root_system.reflection_matrix(root))


def divided_difference(root_system, root, polynomial):
    """
    Return (p - p o sigma_alpha) / <alpha, .>.

    The division is exact; a nonzero remainder can only come from a wrong
    reflection matrix or Gram data and raises an InvariantViolation.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system containing the root.

    root : tuple of int
        Root alpha in simple-root coordinates.

    polynomial : MultiPoly
        Polynomial p.

    Returns
    -------
    quotient : MultiPoly
        The divided difference, of degree deg(p) - 1 or zero.
    """
    difference = polynomial - reflect_poly(root_system, root, polynomial)
    if difference.is_zero():
        return difference
    quotient, remainder = difference.divide_by_linear_form(
        root_system.gram_vector(root)
    )
    if not remainder.is_zero():
        raise InvariantViolation(
            "exact_division",
            "Nonzero remainder in divided difference along "
            + str(tuple(root))
            + ".",
            {"root": list(root), "remainder": remainder.to_json()},
        )
    return quotient
