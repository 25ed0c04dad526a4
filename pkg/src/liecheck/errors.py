"""Exception types raised by the library.

The CLI maps every subclass of :class:`LiecheckError` to exit code 3.
"""


class LiecheckError(Exception):
    """Base class for all library errors."""


class InvalidInput(LiecheckError, ValueError):
    """Malformed or out-of-range input (group type, weight text, JSON)."""


class UnsupportedCharacteristic(LiecheckError):
    """The requested modular data is not determined by the stored tables."""


class InconsistentConstraints(LiecheckError):
    """A constraint system for a torus element has no solution."""


class NonLiftableConstraint(LiecheckError):
    """Solving would require a root of a value that does not exist in the value group."""


class WitnessUnavailable(LiecheckError):
    """No witness element exists for the requested group and characteristic."""
