"""
Exception hierarchy for toric_mori.

Input problems and mathematical failures are kept apart so the CLI can map
them onto distinct exit codes.
"""


class ToricMoriError(Exception):
    """Base class for every error raised by toric_mori."""
    pass


class InputError(ToricMoriError):
    """Raised when user input cannot be read or is malformed."""
    pass


class FanFormatError(InputError):
    """Raised when a fan, morphism or divisor file is ill-formed."""
    pass


class MathematicalError(ToricMoriError):
    """Raised when a mathematical precondition or validation fails."""
    pass
