"""Multiplicity functions on root systems."""

from fractions import Fraction

from hodunkl.common.exceptions import ConfigurationError
from hodunkl.common.json_serializable import (
    JSONSerializable,
    fraction_to_json,
)


class Multiplicity(JSONSerializable):
    """
    A W-invariant nonnegative multiplicity function k.

    The W-orbits of a reduced irreducible root system are told apart by the
    squared root length, so k is stored as a map from squared length to
    value. The orbits are labelled "short" and "long", or "uniform" if all
    roots have the same length.

    Parameters
    ----------
    root_system : hodunkl.rootsystems.RootSystem
        Root system on which k lives.

    values : Fraction or int or str or dict
        A single value used on every orbit, or a dict with the keys "short"
        and "long" (or "uniform").
    """

    def __init__(self, root_system, values=0):
        super(Multiplicity, self).__init__()
        self.root_system = root_system
        lengths = sorted(set(root_system.root_lengths.values()))
        if len(lengths) == 1:
            self.labels = {lengths[0]: "uniform"}
        else:
            self.labels = {lengths[0]: "short", lengths[-1]: "long"}

        if isinstance(values, dict):
            unknown = set(values) - set(self.labels.values()) - {"uniform"}
            if unknown:
                raise ConfigurationError(
                    "Root system "
                    + root_system.code
                    + " has no root orbit labelled "
                    + ", ".join(sorted(unknown))
                    + "."
                )
            by_length = {}
            for length, label in self.labels.items():
                if label in values:
                    by_length[length] = Fraction(values[label])
                elif "uniform" in values:
                    by_length[length] = Fraction(values["uniform"])
                else:
                    raise ConfigurationError(
                        "No multiplicity given for the " + label + " roots."
                    )
        else:
            by_length = {length: Fraction(values) for length in self.labels}

        for length, value in by_length.items():
            if value < 0:
                raise ConfigurationError(
                    "Multiplicity on the "
                    + self.labels[length]
                    + " roots must be nonnegative, got "
                    + str(value)
                    + "."
                )
        self.by_length = by_length

    def value(self, root):
        """
        Return k_alpha.

        Parameters
        ----------
        root : tuple of int
            Root in simple-root coordinates.

        Returns
        -------
        k : Fraction
            Multiplicity of the root.
        """
        return self.by_length[self.root_system.norm_squared(root)]

    def is_zero(self):
        """Return True if k vanishes identically."""
        return all(v == 0 for v in self.by_length.values())

    def per_label(self):
        """Return the values keyed by orbit label."""
        return {
            self.labels[length]: value
            for length, value in sorted(self.by_length.items())
        }

    def to_json(self):
        """Return the canonical JSON form, keyed by orbit label."""
        return {
            label: fraction_to_json(value)
            for label, value in self.per_label().items()
        }

    def __eq__(self, other):
        if not isinstance(other, Multiplicity):
            return NotImplemented
        return (
            self.root_system.code == other.root_system.code
            and self.by_length == other.by_length
        )

    def __hash__(self):
        return hash(
            (self.root_system.code, tuple(sorted(self.by_length.items())))
        )

    def __repr__(self):
        return (
            "Multiplicity("
            + ", ".join(
                label + "=" + str(value)
                for label, value in self.per_label().items()
            )
            + ")"
        )
