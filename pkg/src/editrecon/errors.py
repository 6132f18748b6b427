"""Shared exception types."""


class ResourceLimitError(RuntimeError):
    """Raised when an exact computation would exceed its intended scale."""
