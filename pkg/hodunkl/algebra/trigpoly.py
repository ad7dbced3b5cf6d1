"""Trigonometric polynomials on the weight lattice and their evaluation."""

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
    fraction_to_json,
)


@dataclass(frozen=True)
class ComplexPoint:
    """
    A point z = real + i * imag of the complexified space.

    Both parts are given in simple-root coordinates, as Fractions (exact) or
    floats.

    Attributes
    ----------
    real : tuple
        Real part.

    imag : tuple
        Imaginary part. Defaults to zero.
    """

    real: tuple
    imag: tuple = None

    def __post_init__(self):
        real = tuple(self.real)
        imag = (
            tuple(0 for _ in real) if self.imag is None else tuple(self.imag)
        )
        if len(imag) != len(real):
            raise ValueError("Real and imaginary parts differ in length.")
        if not all(np.isfinite(float(v)) for v in real + imag):
            raise ValueError("Complex points need finite coordinates.")
        object.__setattr__(self, "real", real)
        object.__setattr__(self, "imag", imag)

    @classmethod
    def from_real(cls, coordinates):
        """Create a real point."""
        return cls(tuple(coordinates))

    @property
    def rank(self):
        """Number of coordinates."""
        return len(self.real)

    def is_real(self):
        """Return True if the imaginary part vanishes."""
        return all(v == 0 for v in self.imag)

    def is_exact(self):
        """Return True if all coordinates are exact rationals."""
        return all(
            isinstance(v, (int, Fraction)) for v in self.real + self.imag
        )

    def scaled(self, factor):
        """Return factor * z for a real factor."""
        return ComplexPoint(
            tuple(factor * v for v in self.real),
            tuple(factor * v for v in self.imag),
        )

    def as_complex(self):
        """Return the coordinates as a numpy complex array."""
        return np.array(
            [complex(float(a), float(b)) for a, b in zip(self.real, self.imag)]
        )


class TrigPoly(JSONSerializable):
    """
    Finite sum f = sum_nu f(nu) e^nu over weights nu.

    Weights are integer tuples in the fundamental-weight basis, coefficients
    exact rationals; zero coefficients are never stored.

    Parameters
    ----------
    rank : int
        Rank of the underlying root system.

    terms : dict
        Map weight -> coefficient.
    """

    __hash__ = None

    def __init__(self, rank=1, terms=None):
        super(TrigPoly, self).__init__()
        self.rank = rank
        self._terms = {}
        for weight, coefficient in (terms or {}).items():
            weight = tuple(int(c) for c in weight)
            if len(weight) != rank:
                raise ValueError(
                    "Weight " + str(weight) + " does not have rank "
                    + str(rank)
                )
            value = self._terms.get(weight, 0) + Fraction(coefficient)
            if value == 0:
                self._terms.pop(weight, None)
            else:
                self._terms[weight] = value

    @classmethod
    def _from_clean(cls, rank, terms):
        new = cls.__new__(cls)
        new.rank = rank
        new._terms = terms
        return new

    @classmethod
    def constant(cls, rank, value=1):
        """Return value * e^0."""
        return cls(rank, {(0,) * rank: value})

    @classmethod
    def exponential(cls, weight, coefficient=1):
        """Return coefficient * e^weight."""
        return cls(len(weight), {tuple(weight): coefficient})

    def is_zero(self):
        """Return True for the zero trigonometric polynomial."""
        return len(self._terms) == 0

    def support(self):
        """Return the set of weights with nonzero coefficient."""
        return set(self._terms)

    def coefficient(self, weight):
        """Return the coefficient of e^weight."""
        return self._terms.get(tuple(weight), Fraction(0))

    def terms(self):
        """Return (weight, coefficient) pairs in canonical (sorted) order."""
        return sorted(self._terms.items())

    def value_at_zero(self):
        """Return f(0), the exact sum of all coefficients."""
        return sum(self._terms.values(), Fraction(0))

    def __add__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(self.rank, other)
        terms = dict(self._terms)
        for weight, c in other._terms.items():
            value = terms.get(weight, 0) + c
            if value == 0:
                terms.pop(weight, None)
            else:
                terms[weight] = value
        return TrigPoly._from_clean(self.rank, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.constant(self.rank, other)
        return self + (-other)

    def scale(self, factor):
        """Return factor * self."""
        factor = Fraction(factor)
        if factor == 0:
            return TrigPoly._from_clean(self.rank, {})
        return TrigPoly._from_clean(
            self.rank, {w: c * factor for w, c in self._terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        terms = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = tuple(a + b for a, b in zip(w1, w2))
                terms[w] = terms.get(w, 0) + c1 * c2
        return TrigPoly._from_clean(
            self.rank, {w: c for w, c in terms.items() if c != 0}
        )

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, TrigPoly):
            return self.rank == other.rank and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == TrigPoly.constant(self.rank, other)
        return NotImplemented

    def act(self, element):
        """
        Return w.f, i.e. the function z -> f(w^-1 z).

        Parameters
        ----------
        element : hodunkl.rootsystems.WeylElement
            Weyl group element w; e^nu is mapped to e^(w nu).

        Returns
        -------
        image : TrigPoly
            The transformed trigonometric polynomial.
        """
        terms = {}
        for weight, c in self._terms.items():
            image = element.apply_weight(weight)
            terms[image] = terms.get(image, 0) + c
        return TrigPoly._from_clean(
            self.rank, {w: c for w, c in terms.items() if c != 0}
        )

    def to_json(self):
        """Return the canonical JSON form (sorted list of terms)."""
        return {
            "rank": self.rank,
            "terms": [
                dict(coords=list(w), **fraction_to_json(c))
                for w, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, json_dict):
        """Read a trigonometric polynomial from its canonical JSON form."""
        return cls(
            json_dict["rank"],
            {
                tuple(t["coords"]): fraction_from_json(t)
                for t in json_dict["terms"]
            },
        )

    def __repr__(self):
        if not self._terms:
            return "TrigPoly(0)"
        return (
            "TrigPoly("
            + " + ".join(
                str(c) + "*e^" + str(list(w)) for w, c in self.terms()
            )
            + ")"
        )


def eval_trig(root_system, polynomial, z):
    """
    Evaluate a trigonometric polynomial at a complex point.

    Computes sum_nu f(nu) exp(<nu, z>) in floating complex arithmetic.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Provides the pairing between weights and points.

    polynomial : TrigPoly
        The trigonometric polynomial f.

    z : ComplexPoint or sequence
        Evaluation point in simple-root coordinates.

    Returns
    -------
    value : complex
        f(z).
    """
    if not isinstance(z, ComplexPoint):
        z = ComplexPoint.from_real(z)
    terms = polynomial.terms()
    if len(terms) == 0:
        return complex(0.0)
    exponents = np.array(
        [
            complex(
                float(root_system.weight_pairing(weight, z.real)),
                float(root_system.weight_pairing(weight, z.imag)),
            )
            for weight, _ in terms
        ]
    )
    coefficients = np.array([float(c) for _, c in terms])

    # Largest exponent np.exp can take for double values without
    # returning inf.
    max_exponent = np.log(np.finfo(np.float64).max)
    if np.max(exponents.real) > max_exponent:
        raise OverflowError(
            "Exponent "
            + str(np.max(exponents.real))
            + " too large for floating point evaluation."
        )
    return complex(np.sum(coefficients * np.exp(exponents)))
