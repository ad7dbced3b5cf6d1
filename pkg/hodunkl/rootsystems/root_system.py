"""Crystallographic root systems, weights and the orders on them."""

from collections import deque
from fractions import Fraction
from functools import lru_cache

import numpy as np

from hodunkl.algebra.linear_algebra import invert_exact, mat_vec
from hodunkl.common.exceptions import (
    ConfigurationError,
    InvariantViolation,
    ResourceLimitError,
)
from hodunkl.common.parallelizer import printout
from hodunkl.common.parameters import parse_root_system_code
from hodunkl.rootsystems.convex_hull import (
    hull_contains_dual_cone,
    hull_contains_lp,
)
from hodunkl.rootsystems.weyl_group import (
    enumerate_weyl_group,
    weyl_group_order,
)


def _chain(rank, diagonal, off_diagonal):
    gram = [[0] * rank for _ in range(rank)]
    for i in range(rank):
        gram[i][i] = diagonal[i]
    for (i, j), value in off_diagonal.items():
        gram[i][j] = value
        gram[j][i] = value
    return gram


def gram_matrix(family, rank):
    """
    Return the Gram matrix B_ij = <alpha_i, alpha_j> of the simple roots.

    Short roots have squared length 2, except for A1, where the single
    positive root has squared length 4 (so that the weight lattice is Z
    and the positive root is "2").

    Parameters
    ----------
    family : str
        One of A, B, C, D, E, F, G.

    rank : int
        Rank of the root system.

    Returns
    -------
    gram : list of lists of int
        The Gram matrix.
    """
    unsupported = ConfigurationError(
        "Unsupported root system " + str(family) + str(rank) + "."
    )
    if rank < 1:
        raise unsupported
    path = {(i, i + 1): -1 for i in range(rank - 1)}
    if family == "A":
        if rank == 1:
            return [[4]]
        return _chain(rank, [2] * rank, path)
    if family == "B" and rank >= 2:
        # Long roots first, the last simple root is short.
        return _chain(
            rank,
            [4] * (rank - 1) + [2],
            {edge: -2 for edge in path},
        )
    if family == "C" and rank >= 2:
        path[(rank - 2, rank - 1)] = -2
        return _chain(rank, [2] * (rank - 1) + [4], path)
    if family == "D" and rank >= 4:
        del path[(rank - 2, rank - 1)]
        path[(rank - 3, rank - 1)] = -1
        return _chain(rank, [2] * rank, path)
    if family == "E" and rank in (6, 7, 8):
        # Bourbaki labelling: 1-3-4-5-...-r with 2 attached to 4.
        edges = {(0, 2): -1, (1, 3): -1}
        edges.update({(i, i + 1): -1 for i in range(2, rank - 1)})
        return _chain(rank, [2] * rank, edges)
    if family == "F" and rank == 4:
        return _chain(
            rank, [4, 4, 2, 2], {(0, 1): -2, (1, 2): -2, (2, 3): -1}
        )
    if family == "G" and rank == 2:
        return _chain(rank, [2, 6], {(0, 1): -3})
    raise unsupported


class RootSystem:
    """
    A reduced, irreducible crystallographic root system.

    Weights are integer tuples in the fundamental-weight basis, roots and
    points of a are Fraction tuples in the simple-root basis, and every
    inner product is computed with the exact Gram matrix. Instances are
    immutable after construction and may be shared between threads.

    Parameters
    ----------
    family : str
        Family letter.

    rank : int
        Rank.

    max_weyl_order : int
        Largest Weyl group that will be enumerated.
    """

    def __init__(self, family, rank, max_weyl_order=1152):
        family = str(family).upper()
        self.family = family
        self.rank = rank
        self.code = family + str(rank)
        gram = gram_matrix(family, rank)
        self.gram = tuple(tuple(Fraction(b) for b in row) for row in gram)
        self.gram_inverse = invert_exact(self.gram)

        # cartan[i][j] = <alpha_i, alpha_j^vee>
        self.cartan = tuple(
            tuple(int(2 * gram[i][j] // gram[j][j]) for j in range(rank))
            for i in range(rank)
        )
        for i in range(rank):
            for j in range(rank):
                if Fraction(2 * gram[i][j], gram[j][j]) != self.cartan[i][j]:
                    raise InvariantViolation(
                        "crystallographic",
                        "Non-integral Cartan entry in " + self.code + ".",
                    )

        # Weights to simple-root coordinates: u = B^-1 diag(B_jj / 2) c.
        self._weight_to_root = tuple(
            tuple(
                self.gram_inverse[i][j] * self.gram[j][j] / 2
                for j in range(rank)
            )
            for i in range(rank)
        )

        self.weyl_group = enumerate_weyl_group(
            np.array(self.cartan, dtype=np.int64),
            weyl_group_order(family, rank),
            max_weyl_order,
        )
        # The BFS lists s_1, ..., s_r right after the identity.
        self._elements_by_key = {e.key(): e for e in self.weyl_group}
        self.simple_roots = tuple(
            tuple(1 if i == j else 0 for j in range(rank)) for i in range(rank)
        )

        roots = set()
        for element in self.weyl_group:
            for alpha in self.simple_roots:
                roots.add(tuple(int(x) for x in element.apply_point(alpha)))
        self.positive_roots = tuple(
            sorted(
                (a for a in roots if min(a) >= 0),
                key=lambda a: (sum(a), a),
            )
        )
        self.roots = self.positive_roots + tuple(
            tuple(-x for x in a) for a in self.positive_roots
        )
        if len(self.roots) != len(roots):
            raise InvariantViolation(
                "root_system_signs",
                "Roots of " + self.code + " are not all positive or negative.",
            )
        self.root_lengths = {a: self.inner(a, a) for a in self.roots}
        self.positive_root_weights = {
            a: self.root_to_weight(a) for a in self.positive_roots
        }
        printout(
            "Built root system",
            self.code,
            "with",
            len(self.positive_roots),
            "positive roots and |W| =",
            len(self.weyl_group),
            min_verbosity=2,
        )

    def __repr__(self):
        return "RootSystem(" + self.code + ")"

    ##############################
    # Pairings and coordinates
    ##############################

    def inner(self, u, v):
        """Return <u, v> for two points in simple-root coordinates."""
        return sum(
            (
                u[i] * self.gram[i][j] * v[j]
                for i in range(self.rank)
                for j in range(self.rank)
                if u[i] != 0 and v[j] != 0
            ),
            Fraction(0),
        )

    def gram_vector(self, root):
        """
        Return B a, the coefficients of the linear form <alpha, .>.

        <alpha, x> = sum_j (B a)_j u_j for x = sum_j u_j alpha_j.
        """
        return mat_vec(self.gram, root)

    def norm_squared(self, root):
        """Return |alpha|^2."""
        length = self.root_lengths.get(tuple(root))
        if length is None:
            length = self.inner(root, root)
        return length

    def weight_to_point(self, weight):
        """Return a weight in simple-root coordinates."""
        return mat_vec(self._weight_to_root, weight)

    def root_to_weight(self, root):
        """Return an element of the root lattice in weight coordinates."""
        return tuple(
            sum(root[i] * self.cartan[i][j] for i in range(self.rank))
            for j in range(self.rank)
        )

    def weight_pairing(self, weight, point):
        """
        Return <lambda, x> for a weight and a point.

        Since <lambda, alpha_j> = c_j |alpha_j|^2 / 2, no inversion is
        needed; this works for exact and floating point coordinates alike.
        """
        return sum(
            c * (self.gram[j][j] / 2) * x
            for j, (c, x) in enumerate(zip(weight, point))
            if c != 0
        )

    def coroot_pairing(self, weight, root):
        """Return the integer <lambda, alpha^vee>."""
        value = (
            sum(
                c * self.gram[j][j] * a
                for j, (c, a) in enumerate(zip(weight, root))
            )
            / self.norm_squared(root)
        )
        if value.denominator != 1:
            raise InvariantViolation(
                "weight_lattice",
                "Non-integral pairing of "
                + str(weight)
                + " with the coroot of "
                + str(root)
                + ".",
            )
        return int(value)

    def point_coroot_pairing(self, point, root):
        """Return <x, alpha^vee> for a point x."""
        return 2 * self.inner(point, root) / self.norm_squared(root)

    def reflection_matrix(self, root):
        """
        Return the matrix of sigma_alpha on simple-root coordinates.

        sigma_alpha(u) = u - <u, alpha^vee> alpha, with
        <u, alpha^vee> = 2 (B a) . u / |alpha|^2.
        """
        length = self.norm_squared(root)
        coroot = [2 * g / length for g in self.gram_vector(root)]
        return tuple(
            tuple(
                (1 if i == j else 0) - root[i] * coroot[j]
                for j in range(self.rank)
            )
            for i in range(self.rank)
        )

    def fundamental_pairing(self, point, index):
        """Return <x, omega_index> = u_index |alpha_index|^2 / 2."""
        return point[index] * self.gram[index][index] / 2

    ##############################
    # Dominance and orders
    ##############################

    def is_dominant(self, weight):
        """Return True if <lambda, alpha_i^vee> >= 0 for all i."""
        return all(c >= 0 for c in weight)

    def height(self, point):
        """Return the sum of the simple-root coordinates."""
        return sum(point, Fraction(0))

    def dominant_rep(self, weight):
        """
        Return the dominant weight in the orbit and a w mapping onto it.

        Parameters
        ----------
        weight : tuple of int
            Weight lambda.

        Returns
        -------
        dominant, element : tuple of int, WeylElement
            lambda_+ and w with w lambda = lambda_+.
        """
        current = tuple(weight)
        applied = []
        while True:
            negative = [i for i, c in enumerate(current) if c < 0]
            if not negative:
                break
            i = negative[0]
            current = self._simple_reflect_weight(current, i)
            applied.append(i)
        return current, self.element_from_word(tuple(reversed(applied)))

    def point_dominant_rep(self, point):
        """Return the unique point of the closed chamber in the orbit."""
        current = tuple(Fraction(x) for x in point)
        while True:
            pairing = mat_vec(self.gram, current)
            negative = [i for i, p in enumerate(pairing) if p < 0]
            if not negative:
                return current
            current = self._simple_reflect_point(current, negative[0])

    def dominance_leq(self, mu, weight):
        """Return True if weight - mu lies in Q_+."""
        difference = self.weight_to_point(
            tuple(a - b for a, b in zip(weight, mu))
        )
        return all(d.denominator == 1 and d >= 0 for d in difference)

    def tri_leq(self, nu, weight):
        """
        Return True if nu precedes lambda in the order of the E-basis.

        Orbits are compared by the dominance order of their dominant
        members; inside one orbit the dominance order is reversed.
        """
        nu = tuple(nu)
        weight = tuple(weight)
        if nu == weight:
            return True
        nu_plus = self.dominant_rep(nu)[0]
        weight_plus = self.dominant_rep(weight)[0]
        if nu_plus != weight_plus:
            return self.dominance_leq(nu_plus, weight_plus)
        return self.dominance_leq(weight, nu)

    def orbit(self, weight):
        """Return the W-orbit of a weight, sorted."""
        return sorted(
            self._closure(tuple(weight), self._simple_reflect_weight)
        )

    def point_orbit(self, point):
        """Return the W-orbit of a point of a, sorted."""
        return sorted(
            self._closure(
                tuple(Fraction(x) for x in point), self._simple_reflect_point
            )
        )

    def downset(self, weight, size_limit=5000):
        """
        Return all nu <| lambda, in a linear extension that ends in lambda.

        Dominant candidates are found by a BFS that subtracts positive roots
        while staying dominant; every dominant mu with lambda_+ - mu in Q_+
        is reached this way. The candidates' orbits are then filtered with
        tri_leq.

        Parameters
        ----------
        weight : tuple of int
            Weight lambda.

        size_limit : int
            Maximum number of weights.

        Returns
        -------
        downset : list of tuple of int
            The weights nu <| lambda, lambda last.
        """
        weight = tuple(weight)
        weight_plus = self.dominant_rep(weight)[0]
        dominant = {weight_plus}
        queue = deque([weight_plus])
        while queue:
            mu = queue.popleft()
            for alpha in self.positive_roots:
                alpha_weight = self.positive_root_weights[alpha]
                candidate = tuple(m - a for m, a in zip(mu, alpha_weight))
                if self.is_dominant(candidate) and candidate not in dominant:
                    dominant.add(candidate)
                    queue.append(candidate)
                    if len(dominant) > size_limit:
                        self._downset_overflow(weight, size_limit)

        members = []
        for mu in dominant:
            for nu in self.orbit(mu):
                if mu != weight_plus or self.tri_leq(nu, weight):
                    members.append(nu)
                    if len(members) > size_limit:
                        self._downset_overflow(weight, size_limit)

        top = self.weight_to_point(weight_plus)

        def order(nu):
            nu_point = self.weight_to_point(nu)
            nu_plus_point = self.point_dominant_rep(nu_point)
            gap = self.height(tuple(a - b for a, b in zip(top, nu_plus_point)))
            return (-gap, -self.height(nu_point), nu)

        return sorted(members, key=order)

    ##############################
    # Multiplicity dependent data
    ##############################

    def rho(self, multiplicity):
        """Return rho(k) = 1/2 sum_{alpha > 0} k_alpha alpha."""
        result = [Fraction(0)] * self.rank
        for alpha in self.positive_roots:
            k = multiplicity.value(alpha)
            for i in range(self.rank):
                result[i] += k * alpha[i] / 2
        return tuple(result)

    def tilde(self, multiplicity, weight):
        """
        Return the shifted spectral variable of a weight.

        lambda~ = lambda + 1/2 sum_{alpha > 0} k_alpha eps(<lambda, alpha^vee>)
        alpha with eps(x) = 1 for x > 0 and eps(x) = -1 otherwise.
        """
        result = list(self.weight_to_point(weight))
        for alpha in self.positive_roots:
            k = multiplicity.value(alpha)
            if k == 0:
                continue
            sign = 1 if self.coroot_pairing(weight, alpha) > 0 else -1
            for i in range(self.rank):
                result[i] += sign * k * alpha[i] / 2
        return tuple(result)

    ##############################
    # Convex hulls
    ##############################

    def hull_contains(self, weight, point):
        """
        Return True if a point lies in the convex hull C(lambda) of W lambda.

        Decided twice: by the dual cone criterion and by an exact
        convex-combination search. The two must agree.
        """
        by_cone = hull_contains_dual_cone(self, weight, point)
        by_combination = hull_contains_lp(self, weight, point)
        if by_cone != by_combination:
            raise InvariantViolation(
                "hull_methods_agree",
                "Convex hull tests disagree for lambda = "
                + str(tuple(weight))
                + ", x = "
                + str(tuple(point))
                + ".",
                {
                    "weight": list(weight),
                    "point": [str(x) for x in point],
                    "dual_cone": by_cone,
                    "convex_combination": by_combination,
                },
            )
        return by_cone

    ##############################
    # Weyl group helpers
    ##############################

    def element_from_word(self, word):
        """Return the WeylElement s_i1 ... s_il for a word (i1, ..., il)."""
        root_matrix = np.eye(self.rank, dtype=np.int64)
        for i in word:
            root_matrix = root_matrix @ self.weyl_group[i + 1].root_matrix
        return self._elements_by_key[root_matrix.tobytes()]

    def _simple_reflect_weight(self, weight, i):
        c = weight[i]
        return tuple(
            weight[j] - c * self.cartan[i][j] for j in range(self.rank)
        )

    def _simple_reflect_point(self, point, i):
        pairing = sum(
            point[j] * self.cartan[j][i] for j in range(self.rank)
        )
        return tuple(
            point[j] - pairing if j == i else point[j]
            for j in range(self.rank)
        )

    @staticmethod
    def _closure(start, reflect):
        seen = {start}
        queue = deque([start])
        while queue:
            current = queue.popleft()
            for i in range(len(current)):
                image = reflect(current, i)
                if image not in seen:
                    seen.add(image)
                    queue.append(image)
        return seen

    def _downset_overflow(self, weight, size_limit):
        raise ResourceLimitError(
            "Downset of "
            + str(weight)
            + " in "
            + self.code
            + " exceeds the size limit of "
            + str(size_limit)
            + " weights."
        )


@lru_cache(maxsize=None)
def build_root_system(family, rank, max_weyl_order=1152):
    """
    Build (or fetch the shared instance of) a root system.

    Parameters
    ----------
    family : str
        One of A (rank >= 1), B, C (rank >= 2), D (rank >= 4), G (rank 2),
        F (rank 4) or E (rank 6, 7, 8).

    rank : int
        Rank.

    max_weyl_order : int
        Largest Weyl group that will be enumerated.

    Returns
    -------
    root_system : RootSystem
        The root system.
    """
    return RootSystem(str(family).upper(), int(rank), max_weyl_order)


def root_system_from_code(code, max_weyl_order=1152):
    """Build a root system from a code such as "A2" or "G2"."""
    family, rank = parse_root_system_code(code)
    return build_root_system(family, rank, max_weyl_order)
