"""
Exit codes for domain exceptions.

One entry per exception family, checked in order, the way HTTP handlers are
registered per family: the first matching class decides the code.
"""

from pydantic import ValidationError

from galois_covers.domain.exceptions import (
    InputError,
    ResourceExhaustedError,
    VerificationFailedError,
)

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_RESOURCE_EXHAUSTED = 3

EXCEPTION_EXIT_CODES: list[tuple[type[Exception], int]] = [
    (VerificationFailedError, EXIT_VERIFICATION_FAILED),
    (ResourceExhaustedError, EXIT_RESOURCE_EXHAUSTED),
    (InputError, EXIT_INPUT_ERROR),
    # invalid COVER_* environment values
    (ValidationError, EXIT_INPUT_ERROR),
]


def exit_code_for(exc: Exception) -> int | None:
    """The exit code registered for exc, or None if it is not a handled family."""
    for family, code in EXCEPTION_EXIT_CODES:
        if isinstance(exc, family):
            return code
    return None
