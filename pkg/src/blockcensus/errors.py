"""Shared exception types."""


class InputError(ValueError):
    """Malformed caller-supplied data (bad permutation, bad corpus line, ...)."""


class PreconditionError(ValueError):
    """An operation was called outside its contract (H not a subgroup, ...)."""


class InternalInvariantError(RuntimeError):
    """An exact-arithmetic invariant failed; this always indicates a bug."""
