"""Shared exception types."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed (non-integer series coefficient,
    rounding residual too large, census bookkeeping mismatch, ...).

    This never signals bad user input; it means two routes that must agree
    did not, and the result cannot be trusted.
    """
