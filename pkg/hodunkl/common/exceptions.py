"""Exceptions raised by hodunkl and the exit codes the CLI maps them to."""


class HodunklError(Exception):
    """Base class of all errors raised on purpose by hodunkl."""

    exit_code = 1


class ConfigurationError(HodunklError, ValueError):
    """Invalid configuration or unsupported input, raised before computing."""

    exit_code = 2


class ResourceLimitError(HodunklError):
    """A configured size limit (downset, Weyl group, stage cache) was hit."""

    exit_code = 3


class InvariantViolation(HodunklError):
    """
    A mathematical invariant failed to hold.

    In exact arithmetic none of these can be caused by rounding, so every
    instance points to a defect (or, for positivity, to a counterexample
    worth keeping).

    Parameters
    ----------
    invariant : str
        Short machine-readable name of the violated invariant.

    message : str
        Human-readable description.

    record : dict
        Optional JSON-able data documenting the violation.
    """

    exit_code = 1

    def __init__(self, invariant, message, record=None):
        super(InvariantViolation, self).__init__(message)
        self.invariant = invariant
        self.record = record if record is not None else {}

    def to_json(self):
        """Return the machine-readable failure record."""
        return {
            "status": "invariant_violation",
            "invariant": self.invariant,
            "message": str(self),
            "record": self.record,
        }


class SpectralDegeneracyError(InvariantViolation):
    """No regular direction separating the shifted spectra was found."""

    def __init__(self, message, record=None):
        super(SpectralDegeneracyError, self).__init__(
            "degenerate_spectrum", message, record
        )


class CacheIntegrityError(InvariantViolation):
    """A cache file does not match its key or checksum."""

    def __init__(self, message, record=None):
        super(CacheIntegrityError, self).__init__(
            "cache_integrity", message, record
        )
