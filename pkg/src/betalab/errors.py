"""Exception taxonomy shared across the betalab modules.

Every error raised on purpose by this package derives from :class:`BetalabError`,
so callers (and the CLI) can distinguish deliberate signalling from bugs.  The
subclasses also inherit from the closest builtin so that generic ``except
ValueError`` style handling keeps working.
"""

from __future__ import annotations


class BetalabError(Exception):
    """Base class for all errors raised by betalab."""


class DomainError(BetalabError, ValueError):
    """An argument lies outside the documented domain of an operation."""


class OverflowRangeError(BetalabError, OverflowError):
    """A result (or required intermediate) exceeds double-precision range."""


class EvaluationError(BetalabError, ArithmeticError):
    """A user-supplied callable produced a non-finite value."""


class NonConvergenceError(BetalabError, RuntimeError):
    """An adaptive computation hit its refinement cap before reaching tolerance.

    The partially converged result, when available, is attached as ``result``
    so callers can still inspect value / error estimate / work done.
    """

    def __init__(self, message: str, result=None):
        super().__init__(message)
        self.result = result


class UnknownIdentityError(BetalabError, KeyError):
    """A verification filter named an identity that is not in the registry."""

    def __str__(self) -> str:
        # KeyError would repr() the message; keep it readable.
        return self.args[0] if self.args else ""
