class DomainError(ValueError):
    """An input lies outside the domain of the requested operation."""


class NotRecursivelyPalindromic(DomainError):
    pass


class InvalidCode(DomainError):
    pass


class BoundExceeded(DomainError):
    """An exhaustive enumeration was asked to go past its configured bound."""
