"""Error type shared by every query surface of the package."""


class DomainError(ValueError):
    """Raised when a query argument is outside its valid domain.

    Carries the name of the offending field so front ends (CLI flags,
    HTTP request bodies) can point at exactly what was wrong.
    """

    def __init__(self, message: str, *, field: str | None = None):
        super().__init__(message)
        self.field = field
