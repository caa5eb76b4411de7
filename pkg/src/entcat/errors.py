"""Exception types shared by the library, the HTTP service, and the CLI."""


class EntcatError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EntcatError):
    """Invalid user-supplied data. Maps to CLI exit code 2 and HTTP 400."""


class EmptyInputError(InputError):
    """A vector with no positive components was supplied."""


class VectorFormatError(InputError):
    """A component could not be parsed as a decimal or fraction literal."""


class NonPositiveEntryError(InputError):
    """A negative coefficient was supplied."""


class NotNormalizedError(InputError):
    """Coefficients do not sum to exactly 1 and normalization was not requested."""


class IndexOutOfRangeError(InputError):
    """A 1-based component index lies outside the vector."""


class DimensionMismatchError(InputError):
    """An operation requiring equal Schmidt ranks received vectors of different rank."""


class InvalidParameterError(InputError):
    """A numeric parameter (copy count, probability threshold, ...) is out of range."""


class NoSearchNeededError(InputError):
    """A catalyst search was requested although the plain transformation already succeeds."""


class ResourceLimitError(EntcatError):
    """The expanded component count would exceed the configured cap. CLI exit code 4."""
