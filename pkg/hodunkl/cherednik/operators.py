"""Cherednik operators acting on trigonometric polynomials."""

from hodunkl.algebra.trigpoly import TrigPoly


def cherednik_on_exponential(root_system, multiplicity, direction, weight):
    """
    Apply the Cherednik operator D_xi to a single exponential e^nu.

    The reflection term (1 - e^-alpha)^-1 (1 - sigma_alpha) e^nu is a finite
    geometric sum. With m = <nu, alpha^vee> it equals
    sum_{j=0}^{m-1} e^(nu - j alpha) for m > 0, zero for m = 0 and
    -sum_{j=1}^{-m} e^(nu + j alpha) for m < 0.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    multiplicity : hodunkl.rootsystems.Multiplicity
        Multiplicity k.

    direction : sequence of Fraction
        Direction xi in simple-root coordinates.

    weight : tuple of int
        The weight nu.

    Returns
    -------
    image : dict
        Map weight -> exact coefficient of D_xi e^nu (zeros may occur).
    """
    weight = tuple(weight)
    rho = root_system.rho(multiplicity)
    image = {
        weight: root_system.weight_pairing(weight, direction)
        - root_system.inner(rho, direction)
    }
    for alpha in root_system.positive_roots:
        k = multiplicity.value(alpha)
        if k == 0:
            continue
        factor = k * root_system.inner(alpha, direction)
        if factor == 0:
            continue
        alpha_weight = root_system.positive_root_weights[alpha]
        m = root_system.coroot_pairing(weight, alpha)
        if m > 0:
            steps, sign = range(0, m), -1
        elif m < 0:
            steps, sign = range(1, -m + 1), 1
            factor = -factor
        else:
            continue
        for j in steps:
            target = tuple(
                c + sign * j * a for c, a in zip(weight, alpha_weight)
            )
            image[target] = image.get(target, 0) + factor
    return image


def apply_cherednik(root_system, multiplicity, direction, polynomial):
    """
    Apply the Cherednik operator D_xi to a trigonometric polynomial.

    D_xi = d_xi + sum_{alpha > 0} k_alpha <alpha, xi> (1 - e^-alpha)^-1
    (1 - sigma_alpha) - <rho(k), xi>.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    multiplicity : hodunkl.rootsystems.Multiplicity
        Multiplicity k.

    direction : sequence of Fraction
        Direction xi in simple-root coordinates.

    polynomial : hodunkl.algebra.TrigPoly
        The trigonometric polynomial f.

    Returns
    -------
    image : hodunkl.algebra.TrigPoly
        D_xi f, exact.
    """
    terms = {}
    for weight, coefficient in polynomial.terms():
        for target, value in cherednik_on_exponential(
            root_system, multiplicity, direction, weight
        ).items():
            terms[target] = terms.get(target, 0) + coefficient * value
    return TrigPoly(polynomial.rank, terms)
