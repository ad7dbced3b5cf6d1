"""Weyl groups as explicit integer matrices, generated by BFS closure."""

from dataclasses import dataclass
from math import factorial

import numpy as np

from hodunkl.common.exceptions import (
    ConfigurationError,
    InvariantViolation,
    ResourceLimitError,
)
from hodunkl.common.parallelizer import printout


def weyl_group_order(family, rank):
    """
    Return the classical order of the Weyl group of an irreducible system.

    Parameters
    ----------
    family : str
        Family letter.

    rank : int
        Rank.

    Returns
    -------
    order : int
        |W|.
    """
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2**rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    exceptional = {
        ("G", 2): 12,
        ("F", 4): 1152,
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
    }
    if (family, rank) not in exceptional:
        raise ConfigurationError(
            "Unsupported root system " + family + str(rank) + "."
        )
    return exceptional[(family, rank)]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """
    An element w of the Weyl group.

    Attributes
    ----------
    word : tuple of int
        Reduced-or-not word (i_1, ..., i_l) with w = s_i1 ... s_il, so the
        rightmost reflection acts first.

    root_matrix : numpy.ndarray
        Integer matrix of w acting on simple-root coordinates.

    weight_matrix : numpy.ndarray
        Integer matrix of w acting on fundamental-weight coordinates.
    """

    word: tuple
    root_matrix: np.ndarray
    weight_matrix: np.ndarray

    @property
    def length(self):
        """Length of the stored word."""
        return len(self.word)

    def apply_weight(self, weight):
        """Return w(weight) for a weight in fundamental-weight coordinates."""
        return tuple(
            int(sum(int(m) * c for m, c in zip(row, weight)))
            for row in self.weight_matrix
        )

    def apply_point(self, point):
        """Return w(x) for a point in simple-root coordinates."""
        return tuple(
            sum(int(m) * x for m, x in zip(row, point))
            for row in self.root_matrix
        )

    def key(self):
        """Hashable key identifying the group element."""
        return self.root_matrix.tobytes()


def simple_reflection_matrices(cartan):
    """
    Return the matrices of the simple reflections in both coordinate systems.

    Parameters
    ----------
    cartan : numpy.ndarray
        Cartan matrix with cartan[i, j] = <alpha_i, alpha_j^vee>.

    Returns
    -------
    root_matrices, weight_matrices : list of numpy.ndarray
        s_i on simple-root and on fundamental-weight coordinates.
    """
    rank = cartan.shape[0]
    root_matrices = []
    weight_matrices = []
    for i in range(rank):
        # s_i(u) = u - <u, alpha_i^vee> alpha_i
        on_roots = np.eye(rank, dtype=np.int64)
        on_roots[i, :] -= cartan[:, i]
        # s_i(lambda)_j = c_j - c_i <alpha_i, alpha_j^vee>
        on_weights = np.eye(rank, dtype=np.int64)
        on_weights[:, i] -= cartan[i, :]
        root_matrices.append(on_roots)
        weight_matrices.append(on_weights)
    return root_matrices, weight_matrices


def enumerate_weyl_group(cartan, expected_order, max_order=1152):
    """
    Enumerate the Weyl group by BFS closure of the simple reflections.

    Elements are produced in order of increasing word length, so every
    stored word is reduced.

    Parameters
    ----------
    cartan : numpy.ndarray
        Cartan matrix.

    expected_order : int
        Classical order of the group, used as a consistency check.

    max_order : int
        Largest group that will be enumerated.

    Returns
    -------
    elements : tuple of WeylElement
        All group elements, identity first.
    """
    if expected_order > max_order:
        raise ResourceLimitError(
            "Weyl group of order "
            + str(expected_order)
            + " exceeds the configured maximum of "
            + str(max_order)
            + "."
        )
    rank = cartan.shape[0]
    root_reflections, weight_reflections = simple_reflection_matrices(cartan)
    identity = WeylElement(
        (), np.eye(rank, dtype=np.int64), np.eye(rank, dtype=np.int64)
    )
    elements = [identity]
    seen = {identity.key()}
    frontier = [identity]
    while frontier:
        next_frontier = []
        for element in frontier:
            for i in range(rank):
                candidate = WeylElement(
                    (i,) + element.word,
                    root_reflections[i] @ element.root_matrix,
                    weight_reflections[i] @ element.weight_matrix,
                )
                if candidate.key() in seen:
                    continue
                seen.add(candidate.key())
                elements.append(candidate)
                next_frontier.append(candidate)
        frontier = next_frontier
        if len(elements) > expected_order:
            break
    if len(elements) != expected_order:
        raise InvariantViolation(
            "weyl_group_order",
            "Weyl group closure produced "
            + str(len(elements))
            + " elements, expected "
            + str(expected_order)
            + ".",
            {"closure": len(elements), "expected": expected_order},
        )
    printout("Enumerated Weyl group of order", len(elements), min_verbosity=2)
    return tuple(elements)
