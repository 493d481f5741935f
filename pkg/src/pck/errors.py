"""Exception types shared across the package (and mapped to CLI exit codes)."""

from __future__ import annotations


class InputError(ValueError):
    """An algebra definition is malformed or violates a defining identity."""


class PreconditionError(ValueError):
    """An analysis was asked for on an algebra that does not meet its hypotheses."""
