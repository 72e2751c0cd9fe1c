class LcswError(Exception):
    """Base class for errors raised by this package."""


class ValidationError(LcswError):
    """Bad words, parameters or word files."""


class ConfigError(ValidationError):
    pass


class BudgetExceededError(LcswError):
    """An exhaustive computation would exceed its configured budget."""


class MatcherStageError(LcswError):
    """A matcher stage produced nothing usable; the pipeline falls back."""
