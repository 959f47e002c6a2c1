"""Exception types shared across the package.

Plain ``ValueError`` is raised for contract violations (malformed direct
arguments such as an empty pattern or a window whose length disagrees with q).
The subclasses below mark the coarser failure categories that callers, in
particular the CLI, need to tell apart.
"""


class Error(Exception):
    """Base class for qgramsearch errors."""


class ConfigurationError(Error, ValueError):
    """An invalid parameter or parameter combination (q out of range, ...)."""


class GenerationError(Error, RuntimeError):
    """Corpus generation exhausted its retry budget."""


class BenchmarkError(Error, RuntimeError):
    """A benchmark-time invariant failed, e.g. matchers disagree on counts."""
