"""Exception hierarchy shared across the package."""


class DegseqError(Exception):
    """Base class for all errors raised by degseq_lab."""


class InputError(DegseqError, ValueError):
    """Malformed or invalid input data."""


class SelfLoopError(InputError):
    pass


class DuplicateEdgeError(InputError):
    pass


class VertexRangeError(InputError, IndexError):
    pass


class EmptyGraphError(InputError):
    """Raised when an operation needs at least one edge."""


class UnsupportedInstanceError(InputError):
    """The instance lies outside the range a construction supports."""


class PreconditionError(DegseqError):
    """The caller violated an operation's precondition."""


class ProfileMismatchError(DegseqError):
    """A graph does not realize the target it is checked against."""


class RoleIdentificationError(DegseqError):
    """Gadget roles could not be assigned consistently while decoding."""


class GenerationError(DegseqError):
    """An instance generator cannot satisfy the requested parameters."""


class FormatError(InputError):
    """A text file does not follow the expected format."""
