"""Rational Dunkl operators on polynomials."""

from hodunkl.algebra.multipoly import divided_difference


def apply_dunkl(root_system, multiplicity, direction, polynomial):
    """
    Apply the rational Dunkl operator T_xi to a polynomial.

    T_xi p = d_xi p + sum_{alpha > 0} k_alpha <alpha, xi>
    (p - p o sigma_alpha) / <alpha, .>.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    multiplicity : hodunkl.rootsystems.Multiplicity
        Multiplicity k.

    direction : sequence of Fraction
        Direction xi in simple-root coordinates.

    polynomial : hodunkl.algebra.MultiPoly
        The polynomial p.

    Returns
    -------
    image : hodunkl.algebra.MultiPoly
        T_xi p, of degree deg(p) - 1 or zero.
    """
    result = polynomial.derivative(direction)
    for alpha in root_system.positive_roots:
        k = multiplicity.value(alpha)
        if k == 0:
            continue
        factor = k * root_system.inner(alpha, direction)
        if factor == 0:
            continue
        result = result + divided_difference(
            root_system, alpha, polynomial
        ).scale(factor)
    return result
