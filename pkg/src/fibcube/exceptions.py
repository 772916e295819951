"""Exception types shared across the package."""


class DomainError(ValueError):
    """A string or parameter lies outside the family or range an operation accepts."""


class ResourceError(RuntimeError):
    """A requested size exceeds a configured cap."""
