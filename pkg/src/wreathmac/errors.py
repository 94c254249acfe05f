"""Shared exception types."""


class UsageError(Exception):
    """Bad command-line arguments or malformed input values."""


class VerificationError(Exception):
    """An identity-verification suite reported a failure."""


class InternalConsistencyError(Exception):
    """An internal cross-check failed; this signals a bug, not bad input."""
