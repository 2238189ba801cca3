"""Shared exception types."""


class CapExceeded(RuntimeError):
    """A configured work or size cap refused the computation; the message
    carries the estimated work."""
