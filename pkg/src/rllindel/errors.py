"""Exception taxonomy shared by every module.

The split matters for the CLI exit-code contract: parameter problems
(ValidationError) exit 2, malformed or uncorrectable data (DataError) exit 3.
InvariantError marks conditions the construction guarantees cannot happen for
valid parameters; one firing is a bug or a deliberately excluded parameter set.
"""


class CodecError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(CodecError):
    """A parameter bundle violates one of its documented constraints."""


class DataError(CodecError):
    """An input sequence is malformed for the requested operation."""


class UncorrectableError(DataError):
    """No candidate codeword explains the received word."""


class InvariantError(CodecError):
    """An internal guarantee failed; must never fire for valid parameters."""
