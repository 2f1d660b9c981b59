class InvalidInput(ValueError):
    """Malformed permutation, code, label or argument."""


class ResourceLimitExceeded(RuntimeError):
    """An enumeration would exceed a configured cap."""

    def __init__(self, message: str, cap: int):
        super().__init__(message)
        self.cap = cap
