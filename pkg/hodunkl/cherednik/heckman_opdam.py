"""Non-symmetric Heckman-Opdam polynomials and hypergeometric functions."""

from fractions import Fraction

import numpy as np
from sympy import prime

from hodunkl.algebra.trigpoly import TrigPoly, eval_trig
from hodunkl.cherednik.cache import EPolyCache, epoly_cache_key
from hodunkl.cherednik.operators import cherednik_on_exponential
from hodunkl.common.exceptions import (
    ConfigurationError,
    InvariantViolation,
    SpectralDegeneracyError,
)
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
    fraction_to_json,
)
from hodunkl.common.parallelizer import parallel_map, parallel_warn, printout


class EPoly(JSONSerializable):
    """
    The non-symmetric polynomial E_lambda together with its normalization.

    E_lambda = sum_{nu <| lambda} a_{lambda,nu} e^nu, a_{lambda,lambda} = 1,
    c_lambda = E_lambda(0) and b_{lambda,nu} = a_{lambda,nu} / c_lambda.

    Parameters
    ----------
    root_system_code : str
        Code of the root system, e.g. "A1".

    multiplicity : dict
        JSON form of the multiplicity, keyed by orbit label.

    weight : tuple of int
        The weight lambda.

    downset : list of tuple
        The weights nu <| lambda in the order used by the solver.

    coefficients : TrigPoly
        The coefficients a_{lambda,nu}.

    regular_direction : tuple of Fraction
        Direction xi* used for the triangular solve.
    """

    def __init__(
        self,
        root_system_code="A1",
        multiplicity=None,
        weight=(0,),
        downset=None,
        coefficients=None,
        regular_direction=None,
    ):
        super(EPoly, self).__init__()
        self.root_system_code = root_system_code
        self.multiplicity = multiplicity if multiplicity is not None else {}
        self.weight = tuple(weight)
        self.downset = [tuple(nu) for nu in (downset or [self.weight])]
        self.coefficients = (
            coefficients
            if coefficients is not None
            else TrigPoly.exponential(self.weight)
        )
        self.regular_direction = tuple(regular_direction or ())

    @property
    def rank(self):
        """Rank of the root system."""
        return len(self.weight)

    @property
    def normalization(self):
        """c_lambda = E_lambda(0)."""
        return self.coefficients.value_at_zero()

    def normalized(self):
        """Return E_lambda / c_lambda, the polynomial with coefficients b."""
        return self.coefficients.scale(1 / self.normalization)

    def b_coefficients(self):
        """Return the map nu -> b_{lambda,nu}, in canonical order."""
        return dict(self.normalized().terms())

    def check_invariants(self):
        """
        Check the invariants of the coefficient data exactly.

        The eigen equations are verified by the solver and are not repeated
        here.

        Returns
        -------
        results : dict
            Invariant name -> bool.
        """
        c = self.normalization
        b = self.b_coefficients()
        return {
            "leading_coefficient": self.coefficients.coefficient(self.weight)
            == 1,
            "normalization_positive": c > 0,
            "positivity": all(
                a >= 0 for _, a in self.coefficients.terms()
            ),
            "mass": c != 0 and sum(b.values(), Fraction(0)) == 1,
            "b_in_unit_interval": all(0 <= v <= 1 for v in b.values()),
            "triangular_support": self.coefficients.support()
            <= set(self.downset),
        }

    def to_json(self):
        """Return the canonical JSON form."""
        c = self.normalization
        return {
            "object": "EPoly",
            "root_system": self.root_system_code,
            "multiplicity": self.multiplicity,
            "weight": list(self.weight),
            "downset": [list(nu) for nu in self.downset],
            "coefficients": self.coefficients.to_json()["terms"],
            "normalization": fraction_to_json(c),
            "b": [
                dict(coords=list(nu), **fraction_to_json(v))
                for nu, v in sorted(self.b_coefficients().items())
            ],
            "regular_direction": [
                fraction_to_json(x) for x in self.regular_direction
            ],
        }

    @classmethod
    def from_json(cls, json_dict):
        """Read an EPoly from its canonical JSON form."""
        rank = len(json_dict["weight"])
        return cls(
            root_system_code=json_dict["root_system"],
            multiplicity=json_dict["multiplicity"],
            weight=tuple(json_dict["weight"]),
            downset=[tuple(nu) for nu in json_dict["downset"]],
            coefficients=TrigPoly.from_json(
                {"rank": rank, "terms": json_dict["coefficients"]}
            ),
            regular_direction=tuple(
                fraction_from_json(x) for x in json_dict["regular_direction"]
            ),
        )

    def __repr__(self):
        return (
            "EPoly("
            + self.root_system_code
            + ", lambda="
            + str(self.weight)
            + ", c="
            + str(self.normalization)
            + ")"
        )


class HeckmanOpdam:
    """
    Solver for E_lambda, P_lambda and F(lambda + rho, .) on one (R, k).

    E_lambda is obtained from the eigen equation of a single Cherednik
    operator D_xi* with regular direction xi*, which is triangular in the
    basis e^nu, nu <| lambda. The full system of eigen equations along all
    simple directions is verified exactly afterwards.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system.

    multiplicity : hodunkl.rootsystems.Multiplicity
        Nonnegative multiplicity.

    downset_size_limit : int
        Maximum number of weights in a downset.

    spectral_retries : int
        Number of random regular directions tried after the default one.

    seed : int
        Seed of the random perturbations of the regular direction.

    cache : EPolyCache
        Cache shared between solvers. A private in-memory cache is created
        if None.
    """

    def __init__(
        self,
        root_system,
        multiplicity,
        downset_size_limit=5000,
        spectral_retries=16,
        seed=0,
        cache=None,
    ):
        self.root_system = root_system
        self.multiplicity = multiplicity
        self.downset_size_limit = downset_size_limit
        self.spectral_retries = spectral_retries
        self.seed = seed
        self.cache = cache if cache is not None else EPolyCache()

    @classmethod
    def from_run_config(cls, run_config, root_system, multiplicity):
        """Create a solver with the limits and seed of a RunConfig."""
        return cls(
            root_system,
            multiplicity,
            downset_size_limit=run_config.downset_size_limit,
            spectral_retries=run_config.spectral_retries,
            seed=run_config.seed,
            cache=EPolyCache(run_config.cache_directory),
        )

    ##############################
    # E_lambda
    ##############################

    def compute_E(self, weight):
        """
        Compute E_lambda, or fetch it from the cache.

        Parameters
        ----------
        weight : tuple of int
            Weight lambda.

        Returns
        -------
        epoly : EPoly
            E_lambda with its normalization.
        """
        weight = tuple(int(c) for c in weight)
        if len(weight) != self.root_system.rank:
            raise ConfigurationError(
                "Weight "
                + str(weight)
                + " does not fit "
                + self.root_system.code
                + "."
            )
        key = epoly_cache_key(self.root_system, self.multiplicity, weight)
        cached = self.cache.get(key)
        if cached is not None:
            return EPoly.from_json(cached)

        epoly = self._solve(weight)
        if not all(a >= 0 for _, a in epoly.coefficients.terms()):
            parallel_warn(
                "Negative coefficient in E"
                + str(weight)
                + " for "
                + str(self.multiplicity)
                + "."
            )
        self.cache.put(key, epoly.to_json())
        return epoly

    def compute_many(self, weights, workers=1):
        """Compute E_lambda for several weights, possibly concurrently."""
        return parallel_map(self.compute_E, weights, workers)

    def _solve(self, weight):
        R = self.root_system
        downset = R.downset(weight, self.downset_size_limit)
        position = {nu: i for i, nu in enumerate(downset)}
        spectra = {nu: R.tilde(self.multiplicity, nu) for nu in downset}
        eigenvalues = {
            nu: R.gram_vector(spectrum) for nu, spectrum in spectra.items()
        }

        # D_{alpha_i} e^nu for every simple direction; D_xi is linear in xi.
        columns = []
        for i, alpha in enumerate(R.simple_roots):
            column = {}
            for nu in downset:
                image = cherednik_on_exponential(
                    R, self.multiplicity, alpha, nu
                )
                image = {mu: v for mu, v in image.items() if v != 0}
                self._check_triangular(
                    nu, image, position, eigenvalues[nu][i], i
                )
                column[nu] = image
            columns.append(column)

        direction = self._regular_direction(weight, downset, eigenvalues)
        printout(
            "Solving for E" + str(weight),
            "on a downset of",
            len(downset),
            "weights with xi* =",
            [str(x) for x in direction],
            min_verbosity=2,
        )

        def spectral_value(nu):
            return sum(x * e for x, e in zip(direction, eigenvalues[nu]))

        target = spectral_value(weight)
        coefficients = {weight: Fraction(1)}
        pending = {}

        def spread(nu, a):
            for i, x in enumerate(direction):
                if x == 0:
                    continue
                for mu, v in columns[i][nu].items():
                    if mu != nu:
                        pending[mu] = pending.get(mu, 0) + a * x * v

        spread(weight, Fraction(1))
        for nu in reversed(downset[:-1]):
            value = pending.get(nu, 0)
            if value == 0:
                continue
            a = value / (target - spectral_value(nu))
            coefficients[nu] = a
            spread(nu, a)

        epoly = EPoly(
            root_system_code=R.code,
            multiplicity=self.multiplicity.to_json(),
            weight=weight,
            downset=downset,
            coefficients=TrigPoly(R.rank, coefficients),
            regular_direction=direction,
        )
        self._check_eigen_equations(epoly, columns, eigenvalues[weight])
        return epoly

    def _check_triangular(self, nu, image, position, eigenvalue, index):
        for mu in image:
            if mu not in position or position[mu] > position[nu]:
                raise InvariantViolation(
                    "triangularity",
                    "D e^" + str(nu) + " leaves the ordered downset at "
                    + str(mu) + ".",
                    {"weight": list(nu), "target": list(mu)},
                )
        if image.get(nu, 0) != eigenvalue:
            raise InvariantViolation(
                "triangular_spectrum",
                "Diagonal of D_alpha" + str(index + 1) + " at e^" + str(nu)
                + " differs from the shifted spectrum.",
                {
                    "weight": list(nu),
                    "diagonal": fraction_to_json(image.get(nu, 0)),
                    "expected": fraction_to_json(eigenvalue),
                },
            )

    def _regular_direction(self, weight, downset, eigenvalues):
        rank = self.root_system.rank
        primes = [Fraction(prime(i + 1)) for i in range(rank)]
        generator = np.random.default_rng(self.seed)
        candidate = tuple(primes)
        collisions = []
        for attempt in range(self.spectral_retries + 1):
            if attempt > 0:
                candidate = tuple(
                    p
                    + Fraction(
                        int(generator.integers(1, 1000)),
                        int(generator.integers(1, 1000)),
                    )
                    for p in primes
                )
            values = [
                sum(x * e for x, e in zip(candidate, eigenvalues[nu]))
                for nu in downset
            ]
            if len(set(values)) == len(values):
                return candidate
            collisions = [
                list(nu)
                for nu, v in zip(downset, values)
                if values.count(v) > 1
            ]
        raise SpectralDegeneracyError(
            "No regular direction separates the shifted spectra of the "
            "downset of " + str(weight) + ".",
            {
                "weight": list(weight),
                "multiplicity": self.multiplicity.to_json(),
                "colliding_weights": collisions,
            },
        )

    def _check_eigen_equations(self, epoly, columns, eigenvalue):
        for i, column in enumerate(columns):
            residual = {}
            for nu, a in epoly.coefficients.terms():
                for mu, v in column[nu].items():
                    residual[mu] = residual.get(mu, 0) + a * v
                residual[nu] = residual.get(nu, 0) - eigenvalue[i] * a
            nonzero = {mu: v for mu, v in residual.items() if v != 0}
            if nonzero:
                raise InvariantViolation(
                    "eigen_residual",
                    "E" + str(epoly.weight) + " violates the eigen equation "
                    "along alpha" + str(i + 1) + ".",
                    {
                        "weight": list(epoly.weight),
                        "direction": i,
                        "residual": TrigPoly(epoly.rank, nonzero).to_json(),
                    },
                )

    ##############################
    # Symmetric polynomials and F
    ##############################

    def symmetrize_P(self, epoly):
        """
        Return P_lambda = |W lambda| / |W| sum_w w.E_lambda.

        Parameters
        ----------
        epoly : EPoly
            E_lambda for a dominant lambda.

        Returns
        -------
        symmetric : hodunkl.algebra.TrigPoly
            The W-invariant polynomial P_lambda.
        """
        R = self.root_system
        if not R.is_dominant(epoly.weight):
            raise ConfigurationError(
                "P_lambda needs a dominant weight, got "
                + str(epoly.weight)
                + "."
            )
        total = TrigPoly(R.rank)
        for element in R.weyl_group:
            total = total + epoly.coefficients.act(element)
        symmetric = total.scale(
            Fraction(len(R.orbit(epoly.weight)), len(R.weyl_group))
        )
        for element in R.weyl_group[1 : R.rank + 1]:
            if symmetric.act(element) != symmetric:
                raise InvariantViolation(
                    "w_invariance",
                    "P" + str(epoly.weight) + " is not W-invariant.",
                    {"weight": list(epoly.weight)},
                )
        return symmetric

    def normalization_star(self, epoly):
        """Return c*_lambda = |W lambda| c_lambda = P_lambda(0)."""
        return len(self.root_system.orbit(epoly.weight)) * epoly.normalization

    def eval_F(self, weight, z):
        """
        Evaluate the hypergeometric function F(lambda + rho, z).

        Parameters
        ----------
        weight : tuple of int
            Dominant weight lambda.

        z : hodunkl.algebra.ComplexPoint or sequence
            Point in simple-root coordinates.

        Returns
        -------
        value : complex
            P_lambda(z) / c*_lambda.
        """
        epoly = self.compute_E(weight)
        symmetric = self.symmetrize_P(epoly)
        return eval_trig(self.root_system, symmetric, z) / float(
            self.normalization_star(epoly)
        )

    def spectral_orbit_check(self, weight):
        """
        Return True if lambda~ lies in the W-orbit of lambda + rho(k).

        Parameters
        ----------
        weight : tuple of int
            Dominant weight lambda.

        Returns
        -------
        contained : bool
            Whether the spectrum is W-conjugate to lambda + rho.
        """
        R = self.root_system
        if not R.is_dominant(weight):
            raise ConfigurationError(
                "Orbit check needs a dominant weight, got "
                + str(tuple(weight))
                + "."
            )
        shifted = tuple(
            a + b
            for a, b in zip(
                R.weight_to_point(weight), R.rho(self.multiplicity)
            )
        )
        spectrum = R.tilde(self.multiplicity, weight)
        return spectrum in set(R.point_orbit(shifted))


def compute_E(root_system, multiplicity, weight, **kwargs):
    """Compute E_lambda with a one-off solver (see HeckmanOpdam)."""
    return HeckmanOpdam(root_system, multiplicity, **kwargs).compute_E(weight)
