"""Shared exception types."""


class ValidationError(ValueError):
    """An input failed a structural or numeric precondition."""
