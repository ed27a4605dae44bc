"""Exception types shared across the package.

All of these derive from ValueError so callers that only care about "the
input was bad" can catch that, while the CLI maps each subclass to its own
exit code.
"""


class ZcacsError(ValueError):
    """Base class for every error raised by this package."""


class ShapeError(ZcacsError):
    """Structural mismatch: wrong number of blocks, digits, or array shape."""


class RangeError(ZcacsError):
    """A value fell outside its documented span."""


class ConfigError(ZcacsError):
    """A configuration document or parameter set is invalid."""


class CodesetFormatError(ZcacsError):
    """A code-set file is corrupt or not in a recognised format."""
