"""Exception types shared across the package."""


class KclassError(Exception):
    """Base class for all package-specific errors."""


class CapExceededError(KclassError):
    """Enumeration produced more elements than the caller allowed."""

    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"enumeration cap exceeded: closure has more than {cap} elements")


class DegreeMismatchError(KclassError, ValueError):
    """Permutations of different degrees were combined."""


class NotClosedError(KclassError, ValueError):
    """A set that must be closed under conjugation is not."""


class ParseError(KclassError, ValueError):
    """A group file or manifest line could not be parsed."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(KclassError, ValueError):
    """A catalog entry failed one of its declared expectations."""
