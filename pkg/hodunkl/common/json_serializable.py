"""Base class for all objects that need to be JSON serializable."""

from fractions import Fraction
import hashlib
import inspect
import json


def fraction_to_json(value):
    """
    Convert an exact rational into its canonical JSON form.

    Parameters
    ----------
    value : fractions.Fraction or int
        Value to be converted.

    Returns
    -------
    json_value : dict
        Dictionary with "numerator" and "denominator" entries.
    """
    value = Fraction(value)
    return {"numerator": value.numerator, "denominator": value.denominator}


def fraction_from_json(json_value):
    """
    Read an exact rational from its canonical JSON form.

    Strings such as "3/4" are accepted as well, since this is how rationals
    are written in configuration files.

    Parameters
    ----------
    json_value : dict or str or int
        JSON representation of the rational.

    Returns
    -------
    value : fractions.Fraction
        The rational number.
    """
    if isinstance(json_value, dict):
        return Fraction(json_value["numerator"], json_value["denominator"])
    if isinstance(json_value, float):
        raise ValueError(
            "Floating point values are not accepted as exact rationals: "
            + repr(json_value)
        )
    return Fraction(json_value)


def canonical_dumps(json_dict):
    """Dump a JSON-able object in the canonical (sorted, compact) form."""
    return json.dumps(json_dict, sort_keys=True, separators=(",", ":"))


def canonical_digest(json_dict):
    """Return the sha256 hex digest of the canonical dump of an object."""
    return hashlib.sha256(
        canonical_dumps(json_dict).encode("utf-8")
    ).hexdigest()


class JSONSerializable:
    """
    Base class for all objects that need to be JSON serializable.

    Implements "to_json" and "from_json" for serialization and deserialization,
    respectively. Other classes that also need to be JSON serializable have
    to inherit from this class and reimplement these methods, if necessary.
    """

    def __init__(self):
        pass

    def to_json(self):
        """
        Convert this object to a dictionary that can be saved in a JSON file.

        Returns
        -------
        json_dict : dict
            The object as dictionary for export to JSON.

        """
        return self._standard_serializer()

    @classmethod
    def from_json(cls, json_dict):
        """
        Read this object from a dictionary saved in a JSON file.

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
        return cls._standard_deserializer(json_dict)

    def save_json(self, filename):
        """
        Save this object to a JSON file in canonical form.

        Parameters
        ----------
        filename : string
            Path of the JSON file.
        """
        with open(filename, "w", encoding="utf-8") as f:
            json.dump(self.to_json(), f, sort_keys=True, indent=2)
            f.write("\n")

    def _standard_serializer(self):
        data = {}
        members = inspect.getmembers(
            self, lambda a: not (inspect.isroutine(a))
        )
        for member in members:
            # Filter out all private members, builtins, etc.
            if member[0][0] != "_":
                data[member[0]] = member[1]
        json_dict = {"object": type(self).__name__, "data": data}
        return json_dict

    @classmethod
    def _standard_deserializer(cls, json_dict):
        deserialized_object = cls()
        for key in json_dict:
            setattr(deserialized_object, key, json_dict[key])
        return deserialized_object
