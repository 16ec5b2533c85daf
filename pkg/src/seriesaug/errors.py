"""Exception taxonomy shared by all modules.

The CLI maps these onto exit codes: validation failures (any
:class:`SeriesAugError` that is also a ``ValueError``) exit with 1,
I/O problems with 2.
"""


class SeriesAugError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(SeriesAugError, ValueError):
    """An augmenter parameter violates its precondition."""


class InvalidInputError(SeriesAugError, ValueError):
    """Input data violates a contract (shape, finiteness, consistency)."""


class InvalidConfigError(SeriesAugError, ValueError):
    """A pipeline configuration is malformed or internally inconsistent."""


class UnsupportedPlatformError(SeriesAugError, RuntimeError):
    """The platform lacks a facility the caller asked for (e.g. RSS introspection)."""
