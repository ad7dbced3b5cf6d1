"""Collection of all parameter related classes and functions."""

from dataclasses import dataclass
from fractions import Fraction
import inspect
import json
import re

from hodunkl.common.parallelizer import (
    printout,
    set_current_verbosity,
)
from hodunkl.common.exceptions import ConfigurationError
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_from_json,
)

ROOT_SYSTEM_CODE = re.compile(r"^([A-Za-z])(\d+)$")


class ParametersBase(JSONSerializable):
    """Base parameter class for hodunkl."""

    def __init__(
        self,
    ):
        super(ParametersBase, self).__init__()

    def show(self, indent=""):
        """
        Print name and values of all attributes of this object.

        Parameters
        ----------
        indent : string
            The indent used in the list with which the parameter
            shows itself.

        """
        for v in vars(self):
            if v[0] == "_":
                printout(
                    indent + "%-22s: %s" % (v[1:], getattr(self, v)),
                    min_verbosity=0,
                )
            else:
                printout(
                    indent + "%-22s: %s" % (v, getattr(self, v)),
                    min_verbosity=0,
                )

    def to_json(self):
        """
        Convert this object to a dictionary that can be saved in a JSON file.

        Returns
        -------
        json_dict : dict
            The object as dictionary for export to JSON.

        """
        json_dict = {}
        members = inspect.getmembers(
            self, lambda a: not (inspect.isroutine(a))
        )
        for member in members:
            # Filter out all private members, builtins, etc.
            if member[0][0] != "_":
                json_dict[member[0]] = member[1]
        json_dict["_parameters_type"] = type(self).__name__
        return json_dict

    @classmethod
    def from_json(cls, json_dict):
        """
        Read parameters from a dictionary saved in a JSON file.

        Parameters
        ----------
        json_dict : dict
            A dictionary containing all attributes, properties, etc. as saved
            in the json file.

        Returns
        -------
        deserialized_object : JSONSerializable
            The object as read from the JSON file.

        """
        deserialized_object = cls()
        known = set(vars(deserialized_object).keys())
        for key in json_dict:
            # Filter out all private members, builtins, etc.
            if key == "_parameters_type":
                continue
            if key not in known:
                raise ConfigurationError(
                    "Unknown option '"
                    + key
                    + "' in section "
                    + cls.__name__
                    + "."
                )
            setattr(deserialized_object, key, json_dict[key])
        return deserialized_object


class ParametersRootSystem(ParametersBase):
    """
    Parameters selecting the root system and the multiplicity function.

    Attributes
    ----------
    root_system : string
        Code of the root system, e.g. "A1", "A2", "B2", "C3", "D4", "G2".

    multiplicity : string or dict
        Multiplicity function. Either a single rational written as a string
        ("1/2"), used on every root orbit, or a dictionary with the keys
        "short" and "long" for the two root orbits of B, C and G.

    max_weyl_order : int
        Largest Weyl group that will be enumerated. Default: 1152.
    """

    def __init__(self):
        super(ParametersRootSystem, self).__init__()
        self.root_system = "A1"
        self.multiplicity = "1/2"
        self.max_weyl_order = 1152


class ParametersCherednik(ParametersBase):
    """
    Parameters for the computation of non-symmetric polynomials.

    Attributes
    ----------
    weight : list
        Integer coordinates of the weight lambda in the basis of fundamental
        weights.

    downset_size_limit : int
        Largest number of weights a downset may contain before a
        ResourceLimitError is raised. Default: 5000.

    spectral_retries : int
        Number of randomized regular directions tried when the shifted
        spectrum collides along the default direction. Default: 16.

    cache_directory : string
        If not None, computed polynomials are stored in (and read from) this
        directory, keyed by content hash.
    """

    def __init__(self):
        super(ParametersCherednik, self).__init__()
        self.weight = [1]
        self.downset_size_limit = 5000
        self.spectral_retries = 16
        self.cache_directory = None


class ParametersDunkl(ParametersBase):
    """
    Parameters for the intertwining operator and the Dunkl kernel.

    Attributes
    ----------
    truncation_order : int
        Truncation order N of the exponential series. Default: 30.

    max_stage_degree : int
        Largest degree for which an intertwiner stage is built; asking for
        more raises a ResourceLimitError. Default: 64.

    dump_degree : int
        Highest stage written by the "dunkl-v" command. Default: 4.
    """

    def __init__(self):
        super(ParametersDunkl, self).__init__()
        self.truncation_order = 30
        self.max_stage_degree = 64
        self.dump_degree = 4


class ParametersLimits(ParametersBase):
    """
    Parameters for the scaling limit experiments.

    Attributes
    ----------
    n_list : list
        Strictly increasing list of scaling factors n.

    z_grid : list
        List of points z, each a list of rationals (as strings) in
        simple-root coordinates. If None, five points on the segment
        [-1, 1] times the first simple root are used.

    moment_order : int
        Order m of the moments compared in moment convergence tables.

    moment_direction : list
        Direction z (simple-root coordinates) for the moments. If None, the
        first simple root is used.
    """

    def __init__(self):
        super(ParametersLimits, self).__init__()
        self.n_list = [4, 8, 16, 32, 64]
        self.z_grid = None
        self.moment_order = 1
        self.moment_direction = None


class ParametersVerification(ParametersBase):
    """
    Parameters for the invariant sweeps run by the "verify" command.

    Attributes
    ----------
    root_systems : list
        Root system codes to sweep.

    multiplicity_values : list
        Values (as strings) each root orbit runs through independently.

    weight_box : int or None
        If not None, only weights with all coordinates in
        [-weight_box, weight_box] are swept. Default: None, every weight
        whose downset fits max_downset_size.

    max_downset_size : int
        Weights whose downset is larger than this are skipped.

    random_hull_pairs : int
        Number of random (lambda, x) pairs on which the two hull tests
        are compared, per root system.

    intertwiner_degree : int
        Largest degree for the intertwining identity sweep.

    rankone_max_n : int
        Largest |n| in the rank-one oracle comparison.

    rankone_multiplicities : list
        Values of k (as strings) for the rank-one oracle comparison.
    """

    def __init__(self):
        super(ParametersVerification, self).__init__()
        self.root_systems = ["A1", "A2", "B2"]
        self.multiplicity_values = ["0", "1/2", "1"]
        self.weight_box = None
        self.max_downset_size = 200
        self.random_hull_pairs = 1000
        self.intertwiner_degree = 6
        self.rankone_max_n = 8
        self.rankone_multiplicities = ["0", "1/2", "1", "2"]


class ParametersRunning(ParametersBase):
    """
    Parameters controlling how a command is run and where output goes.

    Attributes
    ----------
    output_format : string
        Either "json" (default) or "csv".

    output_path : string
        Output file. If None, output is written to stdout.

    workers : int
        Number of worker threads used for independent rows. Default: 1.
    """

    def __init__(self):
        super(ParametersRunning, self).__init__()
        self.output_format = "json"
        self.output_path = None
        self.workers = 1


@dataclass(frozen=True)
class RunConfig:
    """
    Validated, immutable configuration of a single run.

    Created by Parameters.to_run_config(); all rationals are
    fractions.Fraction, never floats.
    """

    root_system_code: str
    family: str
    rank: int
    multiplicity: object
    weight: tuple
    truncation_order: int
    max_stage_degree: int
    dump_degree: int
    n_list: tuple
    z_grid: tuple
    moment_order: int
    moment_direction: tuple
    output_format: str
    output_path: object
    seed: int
    downset_size_limit: int
    spectral_retries: int
    cache_directory: object
    max_weyl_order: int
    workers: int
    verification: dict


def parse_root_system_code(code):
    """
    Split a root system code such as "B2" into family and rank.

    Parameters
    ----------
    code : string
        Root system code.

    Returns
    -------
    family, rank : str, int
        Family letter (upper case) and rank.
    """
    match = ROOT_SYSTEM_CODE.match(str(code).strip())
    if match is None:
        raise ConfigurationError("Invalid root system code: " + repr(code))
    return match.group(1).upper(), int(match.group(2))


def parse_rational(value, name, nonnegative=False):
    """
    Parse a rational written as string "p/q" (or an integer).

    Parameters
    ----------
    value : str or int
        Value to parse. Floats are rejected.

    name : str
        Name of the option, used in error messages.

    nonnegative : bool
        If True, negative values are rejected.

    Returns
    -------
    value : fractions.Fraction
        The parsed rational.
    """
    try:
        result = fraction_from_json(value)
    except (ValueError, ZeroDivisionError, TypeError, KeyError):
        raise ConfigurationError(
            "Option " + name + " is not an exact rational: " + repr(value)
        )
    if nonnegative and result < 0:
        raise ConfigurationError(
            "Option " + name + " must be nonnegative, got " + str(result)
        )
    return result


def parse_multiplicity(value):
    """
    Parse a multiplicity option into a Fraction or a dict of Fractions.

    Parameters
    ----------
    value : str or int or dict
        Uniform value or {"short": ..., "long": ...}.

    Returns
    -------
    multiplicity : fractions.Fraction or dict
        Parsed values, all nonnegative.
    """
    if isinstance(value, dict):
        parsed = {}
        for label in value:
            if label not in ("short", "long", "uniform"):
                raise ConfigurationError(
                    "Unknown root orbit label '" + str(label) + "'."
                )
            parsed[label] = parse_rational(
                value[label], "multiplicity." + label, nonnegative=True
            )
        return parsed
    return parse_rational(value, "multiplicity", nonnegative=True)


class Parameters:
    """
    All parameter that hodunkl needs to perform its various tasks.

    Attributes
    ----------
    rootsystem : ParametersRootSystem
        Root system and multiplicity.

    cherednik : ParametersCherednik
        Parameters for non-symmetric polynomials.

    dunkl : ParametersDunkl
        Parameters for the intertwiner and the kernel.

    limits : ParametersLimits
        Parameters for scaling limit experiments.

    verification : ParametersVerification
        Parameters for the invariant sweeps.

    running : ParametersRunning
        Output and parallelization settings.

    manual_seed : int
        Seed of the random number generator used for randomized regular
        directions and random test points. Default: 0.
    """

    def __init__(self):
        self.rootsystem = ParametersRootSystem()
        self.cherednik = ParametersCherednik()
        self.dunkl = ParametersDunkl()
        self.limits = ParametersLimits()
        self.verification = ParametersVerification()
        self.running = ParametersRunning()

        # Attributes.
        self.manual_seed = 0

        # Properties
        self.verbosity = 1

    @property
    def verbosity(self):
        """
        Control the level of output for hodunkl.

        The following options are available:

            - 0: "low", only essential output will be printed
            - 1: "medium", most diagnostic output will be printed. (Default)
            - 2: "high", all information will be printed.


        """
        return self._verbosity

    @verbosity.setter
    def verbosity(self, value):
        self._verbosity = value
        set_current_verbosity(value)

    def show(self):
        """Print name and values of all attributes of this object."""
        printout(
            "--- " + self.__doc__.split("\n")[1].strip() + " ---",
            min_verbosity=0,
        )

        # Two for-statements so that global parameters are shown on top.
        for v in vars(self):
            if isinstance(getattr(self, v), ParametersBase):
                pass
            else:
                if v[0] == "_":
                    printout(
                        "%-22s: %s" % (v[1:], getattr(self, v)),
                        min_verbosity=0,
                    )
                else:
                    printout(
                        "%-22s: %s" % (v, getattr(self, v)), min_verbosity=0
                    )
        for v in vars(self):
            if isinstance(getattr(self, v), ParametersBase):
                parobject = getattr(self, v)
                printout(
                    "--- " + parobject.__doc__.split("\n")[1].strip() + " ---",
                    min_verbosity=0,
                )
                parobject.show("\t")

    def save(self, filename):
        """
        Save the Parameters object to a JSON file.

        Parameters
        ----------
        filename : string
            File to which the parameters will be saved to.

        """
        if filename[-4:] != "json":
            filename += ".json"
        json_dict = {
            "manual_seed": self.manual_seed,
            "verbosity": self.verbosity,
        }
        for v in vars(self):
            member = getattr(self, v)
            if isinstance(member, ParametersBase):
                json_dict[v] = member.to_json()
        with open(filename, "w", encoding="utf-8") as f:
            json.dump(json_dict, f, ensure_ascii=False, indent=4)

    @classmethod
    def load_from_dict(cls, json_dict):
        """
        Create a Parameters object from an already parsed JSON document.

        Parameters
        ----------
        json_dict : dict
            The JSON document.

        Returns
        -------
        loaded_parameters : Parameters
            The loaded Parameters object.
        """
        if not isinstance(json_dict, dict):
            raise ConfigurationError("Configuration must be a JSON object.")
        loaded_parameters = cls()
        for key in json_dict:
            current = getattr(loaded_parameters, key, None)
            if isinstance(current, ParametersBase):
                if not isinstance(json_dict[key], dict):
                    raise ConfigurationError(
                        "Section '" + key + "' must be a JSON object."
                    )
                # These are the other parameter classes.
                setattr(
                    loaded_parameters,
                    key,
                    type(current).from_json(json_dict[key]),
                )
            elif key in ("manual_seed", "verbosity"):
                setattr(loaded_parameters, key, json_dict[key])
            else:
                raise ConfigurationError(
                    "Unknown configuration key '" + key + "'."
                )
        return loaded_parameters

    @classmethod
    def load_from_json(cls, file):
        """
        Load a Parameters object from a json file.

        Parameters
        ----------
        file : string or file object
            File from which the parameters are loaded.

        Returns
        -------
        loaded_parameters : Parameters
            The loaded Parameters object.

        """
        try:
            if isinstance(file, str):
                with open(file, encoding="utf-8") as f:
                    json_dict = json.load(f)
            else:
                json_dict = json.load(file)
        except (OSError, json.JSONDecodeError) as error:
            raise ConfigurationError(
                "Could not read configuration: " + str(error)
            )
        return cls.load_from_dict(json_dict)

    def to_run_config(self):
        """
        Validate all options and convert them into an immutable RunConfig.

        Returns
        -------
        run_config : RunConfig
            The validated configuration.
        """
        family, rank = parse_root_system_code(self.rootsystem.root_system)
        multiplicity = parse_multiplicity(self.rootsystem.multiplicity)

        weight = self.cherednik.weight
        if not isinstance(weight, (list, tuple)) or len(weight) != rank:
            raise ConfigurationError(
                "Weight must be a list of "
                + str(rank)
                + " integers, got "
                + repr(weight)
            )
        if not all(isinstance(c, int) for c in weight):
            raise ConfigurationError("Weight coordinates must be integers.")

        truncation_order = self.dunkl.truncation_order
        if not isinstance(truncation_order, int) or truncation_order < 0:
            raise ConfigurationError("Truncation order N must be >= 0.")
        max_stage_degree = self.dunkl.max_stage_degree
        if not isinstance(max_stage_degree, int) or max_stage_degree < 0:
            raise ConfigurationError("Maximum stage degree must be >= 0.")
        dump_degree = self.dunkl.dump_degree
        if not isinstance(dump_degree, int) or dump_degree < 0:
            raise ConfigurationError("Dump degree must be >= 0.")

        n_list = self.limits.n_list
        if (
            not isinstance(n_list, (list, tuple))
            or len(n_list) == 0
            or not all(isinstance(n, int) and n > 0 for n in n_list)
            or any(a >= b for a, b in zip(n_list, n_list[1:]))
        ):
            raise ConfigurationError(
                "n-list must be a strictly increasing list of positive "
                "integers, got " + repr(n_list)
            )

        if self.limits.z_grid is None:
            z_grid = tuple(
                (Fraction(t, 2),) + (Fraction(0),) * (rank - 1)
                for t in range(-2, 3)
            )
        else:
            z_grid = tuple(
                self._parse_point(z, rank, "z_grid")
                for z in self.limits.z_grid
            )

        if self.limits.moment_direction is None:
            moment_direction = (Fraction(1),) + (Fraction(0),) * (rank - 1)
        else:
            moment_direction = self._parse_point(
                self.limits.moment_direction, rank, "moment_direction"
            )
        if (
            not isinstance(self.limits.moment_order, int)
            or self.limits.moment_order < 0
        ):
            raise ConfigurationError("Moment order must be >= 0.")

        if self.running.output_format not in ("json", "csv"):
            raise ConfigurationError(
                "Output format must be json or csv, got "
                + repr(self.running.output_format)
            )
        workers = self.running.workers
        if not isinstance(workers, int) or workers < 1:
            raise ConfigurationError("Number of workers must be >= 1.")
        if (
            not isinstance(self.cherednik.downset_size_limit, int)
            or self.cherednik.downset_size_limit < 1
        ):
            raise ConfigurationError("Downset size limit must be >= 1.")

        verification = dict(self.verification.to_json())
        verification.pop("_parameters_type")
        for code in verification["root_systems"]:
            parse_root_system_code(code)
        verification["multiplicity_values"] = [
            parse_rational(v, "verification.multiplicity_values", True)
            for v in verification["multiplicity_values"]
        ]
        verification["rankone_multiplicities"] = [
            parse_rational(v, "verification.rankone_multiplicities", True)
            for v in verification["rankone_multiplicities"]
        ]
        weight_box = verification["weight_box"]
        if weight_box is not None and (
            not isinstance(weight_box, int) or weight_box < 0
        ):
            raise ConfigurationError(
                "Weight box must be None or an integer >= 0, got "
                + repr(weight_box)
            )
        max_downset_size = verification["max_downset_size"]
        if not isinstance(max_downset_size, int) or max_downset_size < 1:
            raise ConfigurationError("Maximum downset size must be >= 1.")

        return RunConfig(
            root_system_code=family + str(rank),
            family=family,
            rank=rank,
            multiplicity=multiplicity,
            weight=tuple(weight),
            truncation_order=truncation_order,
            max_stage_degree=max_stage_degree,
            dump_degree=dump_degree,
            n_list=tuple(n_list),
            z_grid=z_grid,
            moment_order=self.limits.moment_order,
            moment_direction=moment_direction,
            output_format=self.running.output_format,
            output_path=self.running.output_path,
            seed=int(self.manual_seed),
            downset_size_limit=self.cherednik.downset_size_limit,
            spectral_retries=self.cherednik.spectral_retries,
            cache_directory=self.cherednik.cache_directory,
            max_weyl_order=self.rootsystem.max_weyl_order,
            workers=self.running.workers,
            verification=verification,
        )

    @staticmethod
    def _parse_point(value, rank, name):
        if not isinstance(value, (list, tuple)) or len(value) != rank:
            raise ConfigurationError(
                "Option "
                + name
                + " needs points with "
                + str(rank)
                + " coordinates, got "
                + repr(value)
            )
        return tuple(parse_rational(c, name) for c in value)
