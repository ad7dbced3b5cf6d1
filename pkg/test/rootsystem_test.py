from fractions import Fraction

import hodunkl
from hodunkl.rootsystems import (
    Multiplicity,
    build_root_system,
    hull_contains_dual_cone,
    hull_contains_lp,
    root_system_from_code,
)
import pytest

half = Fraction(1, 2)


class TestRootSystems:
    """Tests construction of root systems and their Weyl groups."""

    @pytest.mark.parametrize(
        "code, positive, order",
        [
            ("A1", 1, 2),
            ("A2", 3, 6),
            ("A3", 6, 24),
            ("B2", 4, 8),
            ("C3", 9, 48),
            ("D4", 12, 192),
            ("G2", 6, 12),
        ],
    )
    def test_sizes(self, code, positive, order):
        """Number of positive roots and Weyl group order."""
        R = root_system_from_code(code)
        assert len(R.positive_roots) == positive
        assert len(R.weyl_group) == order
        assert len(R.roots) == 2 * positive

    def test_rank_one_normalization(self):
        """A1 has a positive root of squared length 4, so P = Z."""
        R = build_root_system("A", 1)
        assert R.positive_roots == ((1,),)
        assert R.norm_squared((1,)) == 4
        assert R.weight_to_point((1,)) == (half,)
        assert R.coroot_pairing((1,), (1,)) == 1

    def test_roots_closed_under_reflections(self):
        """sigma_alpha(R) = R for every root."""
        for code in ["A2", "B2", "G2"]:
            R = root_system_from_code(code)
            roots = set(R.roots)
            for alpha in R.positive_roots:
                for beta in R.roots:
                    pairing = R.point_coroot_pairing(beta, alpha)
                    assert pairing.denominator == 1
                    image = tuple(
                        b - pairing * a for a, b in zip(alpha, beta)
                    )
                    assert image in roots

    def test_unsupported(self):
        """Unknown families and ranks are configuration errors."""
        with pytest.raises(hodunkl.ConfigurationError):
            root_system_from_code("B1")
        with pytest.raises(hodunkl.ConfigurationError):
            root_system_from_code("X3")

    def test_weyl_cap(self):
        """Enumerating a group above the cap is a resource limit."""
        with pytest.raises(hodunkl.ResourceLimitError):
            build_root_system("B", 4, max_weyl_order=100)

    def test_rho(self):
        """<rho(k), alpha_i^vee> = k for A2 at uniform k."""
        R = build_root_system("A", 2)
        k = Multiplicity(R, Fraction(3, 4))
        rho = R.rho(k)
        for alpha in R.simple_roots:
            assert R.point_coroot_pairing(rho, alpha) == Fraction(3, 4)


class TestOrders:
    """Tests dominant representatives, the E-basis order and downsets."""

    def test_dominant_rep(self):
        """lambda_+ and w with w lambda = lambda_+."""
        R = build_root_system("A", 1)
        dominant, element = R.dominant_rep((-3,))
        assert dominant == (3,)
        assert element.apply_weight((-3,)) == (3,)
        dominant, element = R.dominant_rep((2,))
        assert dominant == (2,) and element.length == 0

        R = build_root_system("A", 2)
        dominant, element = R.dominant_rep((-1, 0))
        assert dominant == (0, 1)
        assert element.apply_weight((-1, 0)) == (0, 1)
        assert dominant in R.orbit((-1, 0))

    def test_dominant_rep_orbit_invariant(self):
        """dominant_rep(w lambda) = dominant_rep(lambda)."""
        R = build_root_system("B", 2)
        weight = (2, -3)
        dominant = R.dominant_rep(weight)[0]
        for element in R.weyl_group:
            image = element.apply_weight(weight)
            assert R.dominant_rep(image)[0] == dominant

    def test_tri_leq(self):
        """The order reverses dominance inside an orbit."""
        R = build_root_system("A", 1)
        assert R.tri_leq((1,), (-1,))
        assert not R.tri_leq((-1,), (1,))
        assert R.tri_leq((0,), (2,))
        assert R.tri_leq((2,), (2,))

    @pytest.mark.parametrize(
        "code, weight",
        [("A2", (1, -2)), ("A2", (-2, 2)), ("B2", (-1, 2)), ("B2", (2, -1))],
    )
    def test_tri_leq_partial_order(self, code, weight):
        """Reflexive, antisymmetric and transitive on a downset."""
        R = hodunkl.root_system_from_code(code)
        downset = R.downset(weight)
        below = {
            nu: {mu for mu in downset if R.tri_leq(mu, nu)} for nu in downset
        }
        for nu in downset:
            assert nu in below[nu]
            for mu in below[nu]:
                if mu != nu:
                    assert nu not in below[mu]
                assert below[mu] <= below[nu]
        assert below[weight] == set(downset)

    @pytest.mark.parametrize(
        "weight, expected",
        [((1,), [(1,)]), ((-1,), [(1,), (-1,)]), ((2,), [(0,), (2,)])],
    )
    def test_downset_rank_one(self, weight, expected):
        """Hand-computed A1 downsets, lambda last."""
        R = build_root_system("A", 1)
        assert R.downset(weight) == expected

    def test_downset_linear_extension(self):
        """Downsets list nu before mu whenever nu <| mu."""
        R = build_root_system("A", 2)
        downset = R.downset((1, -2))
        assert downset[-1] == (1, -2)
        for i, nu in enumerate(downset):
            assert R.tri_leq(nu, (1, -2))
            for mu in downset[i + 1 :]:
                assert not R.tri_leq(mu, nu)
        assert len(set(downset)) == len(downset)

    def test_downset_limit(self):
        """A downset above the size limit raises ResourceLimitError."""
        R = build_root_system("A", 2)
        with pytest.raises(hodunkl.ResourceLimitError):
            R.downset((6, 6), size_limit=10)

    def test_tilde(self):
        """Shifted spectral variable."""
        R = build_root_system("A", 1)
        k = Multiplicity(R, half)
        # 1 + k and -1 - k on the line, halved in root coordinates.
        assert R.tilde(k, (1,)) == ((1 + half) / 2,)
        assert R.tilde(k, (-1,)) == (-(1 + half) / 2,)

        R = build_root_system("B", 2)
        k = Multiplicity(R, {"short": half, "long": Fraction(2)})
        rho = R.rho(k)
        assert R.tilde(k, (0, 0)) == tuple(-x for x in rho)


class TestMultiplicity:
    """Tests multiplicity functions."""

    def test_labels(self):
        """Simply laced systems have one orbit, B2 has two."""
        R = build_root_system("A", 2)
        assert Multiplicity(R, 1).per_label() == {"uniform": 1}
        R = build_root_system("B", 2)
        k = Multiplicity(R, {"short": 1, "long": 2})
        assert k.per_label() == {"short": 1, "long": 2}
        short = min(R.positive_roots, key=R.norm_squared)
        assert k.value(short) == 1

    def test_rejections(self):
        """Negative values and unknown labels are rejected."""
        R = build_root_system("B", 2)
        with pytest.raises(hodunkl.ConfigurationError):
            Multiplicity(R, Fraction(-1, 2))
        with pytest.raises(hodunkl.ConfigurationError):
            Multiplicity(R, {"short": 1})
        with pytest.raises(hodunkl.ConfigurationError):
            Multiplicity(build_root_system("A", 2), {"long": 1})


class TestConvexHull:
    """Tests both membership tests for C(lambda)."""

    def test_examples(self):
        """Vertices, intervals and the origin."""
        R = build_root_system("A", 1)
        assert R.hull_contains((3,), R.weight_to_point((3,)))
        assert R.hull_contains((3,), R.weight_to_point((1,)))
        assert not R.hull_contains((3,), R.weight_to_point((5,)))

        R = build_root_system("A", 2)
        highest_root = (1, 1)
        assert R.hull_contains(highest_root, (0, 0))
        assert not R.hull_contains(highest_root, (2, 0))

    def test_downsets_in_hull(self):
        """Every nu <| lambda lies in C(lambda)."""
        for code in ["A2", "B2", "G2"]:
            R = root_system_from_code(code)
            for weight in [(1, 0), (0, 1), (1, -1), (-2, 1)]:
                for nu in R.downset(weight):
                    assert R.hull_contains(weight, R.weight_to_point(nu))

    def test_methods_agree(self):
        """Dual cone and convex combination agree on a grid of points."""
        R = build_root_system("B", 2)
        for weight in [(1, 0), (0, 1), (1, 1), (-1, 2)]:
            for a in range(-6, 7):
                for b in range(-6, 7):
                    point = (Fraction(a, 2), Fraction(b, 2))
                    assert hull_contains_dual_cone(
                        R, weight, point
                    ) == hull_contains_lp(R, weight, point)
