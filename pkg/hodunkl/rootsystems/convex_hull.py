"""Membership tests for the convex hull C(lambda) of a Weyl group orbit."""

from fractions import Fraction
import itertools

from hodunkl.algebra.linear_algebra import solve_exact


def hull_contains_dual_cone(root_system, weight, point):
    """
    Decide x in C(lambda) with the dual cone criterion.

    x lies in C(lambda) iff lambda_+ - x_+ lies in the dual cone C* of the
    closed chamber, i.e. pairs nonnegatively with every fundamental weight.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    weight : tuple of int
        Weight lambda.

    point : sequence of Fraction
        Point x in simple-root coordinates.

    Returns
    -------
    contained : bool
        True if x is in C(lambda).
    """
    weight_plus = root_system.dominant_rep(weight)[0]
    top = root_system.weight_to_point(weight_plus)
    point_plus = root_system.point_dominant_rep(point)
    difference = tuple(a - b for a, b in zip(top, point_plus))
    return all(
        root_system.fundamental_pairing(difference, i) >= 0
        for i in range(root_system.rank)
    )


def convex_combination(root_system, weight, point):
    """
    Search for x as an exact convex combination of the orbit points.

    By Caratheodory's theorem it suffices to look at affinely independent
    subsets of r + 1 orbit points (the orbit of a nonzero weight affinely
    spans a). Each subset gives a square system whose unique solution is
    tested for nonnegativity, i.e. the vertices of the feasible polytope
    are enumerated.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    weight : tuple of int
        Weight lambda.

    point : sequence of Fraction
        Point x in simple-root coordinates.

    Returns
    -------
    weights : dict or None
        Map orbit point -> nonnegative coefficient summing to one, or None
        if x is not in C(lambda).
    """
    point = tuple(Fraction(x) for x in point)
    vertices = [
        root_system.weight_to_point(nu) for nu in root_system.orbit(weight)
    ]
    if point in vertices:
        return {point: Fraction(1)}
    if len(vertices) == 1:
        return None

    rank = root_system.rank
    for subset in itertools.combinations(vertices, rank + 1):
        matrix = [[v[i] for v in subset] for i in range(rank)]
        matrix.append([Fraction(1)] * (rank + 1))
        coefficients = solve_exact(matrix, list(point) + [Fraction(1)])
        if coefficients is not None and all(c >= 0 for c in coefficients):
            return {
                v: c for v, c in zip(subset, coefficients) if c != 0
            }
    return None


def hull_contains_lp(root_system, weight, point):
    """Decide x in C(lambda) by an exact convex-combination search."""
    return convex_combination(root_system, weight, point) is not None
