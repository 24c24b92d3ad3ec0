"""Exception hierarchy shared across the package."""


class PhaseRecError(Exception):
    """Base class for all phaserec errors."""


class InvalidInputError(PhaseRecError):
    """Raised when inputs violate a documented precondition (shape/grid
    mismatch, non-finite samples, non-positive amplitude, ...)."""


class DivergenceError(PhaseRecError):
    """Raised when the iterative solver diverges (energy grows past the
    abort threshold).  Usually means the step size is too large."""


class FormatError(PhaseRecError):
    """Raised on malformed PFM/PGM/manifest files.

    ``offset`` carries the byte offset at which parsing failed, when known.
    """

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset
