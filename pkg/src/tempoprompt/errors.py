"""Exception hierarchy shared across the package.

The CLI maps these to process exit codes: ConfigError and its subclasses
exit 1, NumericalError exits 2, LeakageError exits 3.
"""


class TempoPromptError(Exception):
    """Base class for all package errors."""


class ConfigError(TempoPromptError):
    """Invalid configuration, argument, or violated call contract."""


class ShapeError(ConfigError):
    """Tensor dimension mismatch; the message names both shapes."""


class ContractError(ConfigError):
    """A documented precondition or internal consistency check failed."""


class FormatError(ConfigError):
    """Malformed binary or text artifact; the message carries a byte offset."""


class NumericalError(TempoPromptError):
    """Non-finite values or degenerate numerical input."""


class DegenerateInputError(NumericalError):
    """Input in a measure-zero configuration the math cannot handle (e.g. a zero row fed to L2 normalization)."""


class LeakageError(TempoPromptError):
    """Train/eval class or video overlap that would invalidate a protocol."""
