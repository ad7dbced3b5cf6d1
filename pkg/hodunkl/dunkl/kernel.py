"""
Truncated Dunkl kernel, generalized Bessel function and moments.

Exp_W(x, z) = V(e^<., z>)(x) is realized through its exponential series
sum_m (1/m!) V(<., z>^m)(x), truncated at order N. The homogeneous piece of
degree m is obtained by expanding <., z>^m in the monomial basis, so that

    (1/m!) V(<., z>^m)(x) = sum_{|e| = m} prod_i (Bz)_i^e_i / e_i! V(u^e)(x),

where Bz are the coefficients of the linear form <., z> in the simple-root
coordinates u.
"""

from fractions import Fraction
from math import factorial, prod

from hodunkl.algebra.multipoly import MultiPoly
from hodunkl.algebra.trigpoly import ComplexPoint
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
    fraction_to_json,
)


def _as_point(z):
    return z if isinstance(z, ComplexPoint) else ComplexPoint.from_real(z)


def _linear_form(root_system, z):
    # Coefficients of <., z>; exact for exact real z.
    z = _as_point(z)
    if z.is_exact() and z.is_real():
        return [
            sum((b * x for b, x in zip(row, z.real)), Fraction(0))
            for row in root_system.gram
        ]
    values = z.as_complex()
    return [
        sum(float(b) * x for b, x in zip(row, values))
        for row in root_system.gram
    ]


def homogeneous_term(intertwiner, x, z, degree):
    """
    Return (1/m!) V(<., z>^m)(x).

    The value is an exact Fraction when x and z are rational and z is real,
    a complex number otherwise.
    """
    stage = intertwiner.stage(degree)
    coefficients = _linear_form(intertwiner.root_system, z)
    values = intertwiner.values_at(x, degree)
    total = 0
    for exponents, value in zip(stage.basis, values):
        if value == 0:
            continue
        weight = 1
        for g, p in zip(coefficients, exponents):
            if p:
                weight = weight * g**p / factorial(p)
        total = total + weight * value
    return total


def expw_truncated(intertwiner, x, z, truncation_order):
    """
    Evaluate the truncated Dunkl kernel sum_{m <= N} (1/m!) V(<., z>^m)(x).

    Parameters
    ----------
    intertwiner : hodunkl.dunkl.DunklIntertwiner
        The intertwiner of (R, k).

    x : sequence of Fraction
        Rational point in simple-root coordinates.

    z : hodunkl.algebra.ComplexPoint or sequence
        Complex point in simple-root coordinates.

    truncation_order : int
        Truncation order N.

    Returns
    -------
    value, tail : complex, float
        The truncated kernel and the magnitude of its last term.
    """
    value = 0
    term = 0
    for m in range(truncation_order + 1):
        term = homogeneous_term(intertwiner, x, z, m)
        value = value + term
    return complex(value), abs(complex(term))


def bessel_JW(intertwiner, x, z, truncation_order):
    """
    Evaluate the truncated generalized Bessel function J_W(x, z).

    J_W(x, z) = (1/|W|) sum_w Exp_W(x, w z), each kernel truncated at N.

    Parameters
    ----------
    intertwiner : hodunkl.dunkl.DunklIntertwiner
        The intertwiner of (R, k).

    x : sequence of Fraction
        Rational point in simple-root coordinates.

    z : hodunkl.algebra.ComplexPoint or sequence
        Complex point in simple-root coordinates.

    truncation_order : int
        Truncation order N.

    Returns
    -------
    value : complex
        The W-average of the truncated kernel.
    """
    z = _as_point(z)
    group = intertwiner.root_system.weyl_group
    total = 0
    for element in group:
        image = ComplexPoint(
            element.apply_point(z.real), element.apply_point(z.imag)
        )
        total += expw_truncated(intertwiner, x, image, truncation_order)[0]
    return complex(total) / len(group)


def v_moment(intertwiner, x, z, order):
    """
    Return V(<., z>^m)(x).

    This is the m-th moment of the representing measure of x in direction
    z; exact (Fraction) for rational real z.
    """
    return factorial(order) * homogeneous_term(intertwiner, x, z, order)


class KernelSeries(JSONSerializable):
    """
    The homogeneous pieces h_m of z -> Exp_W(x, z), as polynomials in z.

    By the symmetry of the kernel, h_m = V(<., x>^m) / m!, evaluated at z.
    Equivalently, h_m(z) is the degree m piece of the series of
    Exp_W(x, z) in z; kernel_series checks the two agree exactly.

    Parameters
    ----------
    point : tuple of Fraction
        The rational point x.

    homogeneous : list of MultiPoly
        h_0, ..., h_N as polynomials in the simple-root coordinates of z.
    """

    def __init__(self, point=(0,), homogeneous=None):
        super(KernelSeries, self).__init__()
        self.point = tuple(point)
        self.homogeneous = (
            homogeneous
            if homogeneous is not None
            else [MultiPoly.constant(len(self.point), 1)]
        )

    @property
    def truncation_order(self):
        """Truncation order N."""
        return len(self.homogeneous) - 1

    def evaluate(self, z):
        """
        Evaluate the truncated series at z.

        Returns
        -------
        value, tail : complex, float
            The sum of h_0(z), ..., h_N(z) and |h_N(z)|.
        """
        z = _as_point(z)
        if z.is_real():
            coordinates = z.real
        else:
            coordinates = tuple(z.as_complex())
        values = [complex(h.evaluate(coordinates)) for h in self.homogeneous]
        return complex(sum(values)), abs(values[-1])

    def to_json(self):
        """Return the exact JSON form."""
        return {
            "object": "KernelSeries",
            "point": [fraction_to_json(x) for x in self.point],
            "homogeneous": [h.to_json() for h in self.homogeneous],
        }

    @classmethod
    def from_json(cls, json_dict):
        """Read a kernel series from its JSON form."""
        return cls(
            tuple(fraction_from_json(x) for x in json_dict["point"]),
            [MultiPoly.from_json(h) for h in json_dict["homogeneous"]],
        )


def kernel_series(intertwiner, x, truncation_order):
    """
    Return the homogeneous pieces of z -> Exp_W(x, z) up to order N.

    Parameters
    ----------
    intertwiner : hodunkl.dunkl.DunklIntertwiner
        The intertwiner of (R, k).

    x : sequence of Fraction
        Rational point in simple-root coordinates.

    truncation_order : int
        Truncation order N.

    Returns
    -------
    series : KernelSeries
        h_0, ..., h_N as exact polynomials in z.
    """
    R = intertwiner.root_system
    x = tuple(Fraction(c) for c in x)
    pairing = MultiPoly.linear_form(R.gram_vector(x))
    homogeneous = []
    power = MultiPoly.constant(R.rank, 1)
    for m in range(truncation_order + 1):
        if m > 0:
            power = power * pairing
        homogeneous.append(
            intertwiner.stage(m).apply(power).scale(Fraction(1, factorial(m)))
        )
    return KernelSeries(x, homogeneous)


def kernel_symmetry_defect(intertwiner, x, truncation_order):
    """
    Compare both expansions of z -> Exp_W(x, z), degree by degree.

    One side applies V to <., x>^m, the other expands <., z>^m, applies V
    and evaluates at x. The kernel is symmetric, so both must agree exactly.

    Returns
    -------
    defects : list of MultiPoly
        Difference of the two degree m pieces, for m = 0..N.
    """
    R = intertwiner.root_system
    series = kernel_series(intertwiner, x, truncation_order)
    defects = []
    for m, h in enumerate(series.homogeneous):
        stage = intertwiner.stage(m)
        values = intertwiner.values_at(x, m)
        in_coordinates = MultiPoly(
            R.rank,
            {
                e: value / prod(factorial(p) for p in e)
                for e, value in zip(stage.basis, values)
            },
        )
        # <y, z> = sum_i (Bz)_i u_i(y): substitute u -> Bz.
        defects.append(h - in_coordinates.compose_linear(R.gram))
    return defects
