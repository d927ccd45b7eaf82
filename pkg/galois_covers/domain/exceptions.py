"""
Domain exceptions for the covering engine.

These exceptions represent invalid input, exhausted resources and failed
checks. The CLI adapter maps each family to one exit code.
"""


class CoveringEngineError(Exception):
    """Base exception for all covering engine errors."""

    pass


# Input Exceptions
class InputError(CoveringEngineError):
    """Raised when input validation fails."""

    def __init__(self, message: str, field: str | None = None):
        self.field = field
        super().__init__(message)


class WordError(InputError):
    """Raised when a word uses a letter outside its alphabet or is too long."""

    pass


class AlphabetMismatchError(InputError):
    """Raised when two objects over different generator alphabets are combined."""

    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"Alphabet mismatch: expected {expected} generators, got {actual}"
        )


class PresentationError(InputError):
    """Raised when a presentation is malformed."""

    pass


class ComplexError(InputError):
    """Raised when a 2-complex violates its invariants. Carries every violation."""

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations) or "invalid complex")


class ParseError(InputError):
    """Raised when a text format cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class UnsupportedInputError(InputError):
    """Raised when input lies outside the hypotheses an operation supports."""

    pass


class ResourceNotFoundError(InputError):
    """Raised when a named object or file does not exist."""

    def __init__(self, resource_type: str, resource_id: str):
        self.resource_type = resource_type
        self.resource_id = resource_id
        super().__init__(f"{resource_type} '{resource_id}' not found")


# Resource Exceptions
class ResourceExhaustedError(CoveringEngineError):
    """
    Raised when coset enumeration would exceed its live-coset cap.

    The index may be infinite or the cap too small; the two cannot be told apart.
    """

    def __init__(self, limit: int, live: int):
        self.limit = limit
        self.live = live
        super().__init__(
            f"Coset enumeration exceeded {limit} live cosets "
            "(index possibly infinite or cap too small)"
        )


# Verification Exceptions
class VerificationFailedError(CoveringEngineError):
    """Raised when a check ran to completion and found failures."""

    def __init__(self, message: str, failures: list[str] | None = None):
        self.failures = list(failures or [])
        super().__init__(message)
