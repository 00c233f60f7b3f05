"""Exception hierarchy shared across the package."""


class LabelDpError(Exception):
    """Base class for all errors raised by this package."""


class InputError(LabelDpError, ValueError):
    """A caller-supplied value violates a documented precondition."""


class ParseError(InputError):
    """A data file could not be parsed; message names the offending row."""


class ConfigError(InputError):
    """Inconsistent or incomplete configuration (e.g. mismatched noise
    and post-processing kinds)."""


class TrainingError(LabelDpError, RuntimeError):
    """Training aborted: non-finite loss, or a query loop that cannot
    make progress."""
