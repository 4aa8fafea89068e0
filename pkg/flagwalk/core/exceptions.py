"""Custom exceptions and their conversion to CLI payloads."""

from typing import Any

from pydantic import ValidationError

# Process exit codes
EXIT_OK = 0
EXIT_INVALID_MAP = 1
EXIT_USAGE = 2
EXIT_THEOREM_VIOLATION = 3
EXIT_INTERNAL = 4


class FlagwalkException(Exception):
    """Base exception for flagwalk errors."""

    def __init__(
        self,
        message: str,
        exit_code: int = EXIT_INVALID_MAP,
        details: dict[str, Any] | None = None,
    ) -> None:
        """
        Initialize exception.

        Args:
            message: Error message
            exit_code: Process exit code the CLI reports for this error
            details: Additional error details
        """
        self.message = message
        self.exit_code = exit_code
        self.details = details or {}
        super().__init__(self.message)


class MapValidationException(FlagwalkException):
    """A flag system violates the map axioms."""

    def __init__(
        self, message: str = "Invalid map", violations: list[dict[str, Any]] | None = None
    ) -> None:
        """Initialize exception."""
        super().__init__(
            message, exit_code=EXIT_INVALID_MAP, details={"violations": violations or []}
        )


class UsageException(FlagwalkException):
    """Bad arguments or unreadable input."""

    def __init__(self, message: str = "Bad usage", details: dict[str, Any] | None = None) -> None:
        """Initialize exception."""
        super().__init__(message, exit_code=EXIT_USAGE, details=details)


class MapfileFormatException(UsageException):
    """Malformed mapfile text."""

    def __init__(
        self, message: str = "Malformed mapfile", errors: list[dict[str, Any]] | None = None
    ) -> None:
        """Initialize exception."""
        super().__init__(message, details={"errors": errors or []})


class NotEquivelarException(UsageException):
    """Hole and Petrie machinery needs every vertex to share one valence."""

    def __init__(self, valences: list[int]) -> None:
        """Initialize exception."""
        super().__init__("Map is not equivelar", details={"valences": sorted(set(valences))})


class WalkParameterException(UsageException):
    """Walk parameter j outside 1..q-1."""

    def __init__(self, j: int, valence: int) -> None:
        """Initialize exception."""
        super().__init__(
            f"j must satisfy 1 <= j <= {valence - 1}, got {j}",
            details={"j": j, "valence": valence},
        )


class NotDartTransitiveException(UsageException):
    """The chosen group does not act transitively on darts."""

    def __init__(self, dart_orbits: int) -> None:
        """Initialize exception."""
        super().__init__(
            "Group is not transitive on darts", details={"dart_orbits": dart_orbits}
        )


class NotOrientableException(UsageException):
    """The rotation subgroup was requested on a non-orientable map."""

    def __init__(self, message: str = "Map is not orientable") -> None:
        """Initialize exception."""
        super().__init__(message)


class NotFaceBipartiteException(UsageException):
    """The chromatic subgroup was requested on a map whose faces admit no 2-colouring."""

    def __init__(self, message: str = "Map is not face-bipartite") -> None:
        """Initialize exception."""
        super().__init__(message)


class FixtureNotFoundException(UsageException):
    """Unknown fixture name."""

    def __init__(self, name: str, known: list[str]) -> None:
        """Initialize exception."""
        super().__init__(f"Unknown fixture '{name}'", details={"known": known})


class TheoremViolationException(FlagwalkException):
    """A computed result contradicts an orbit-count or classification theorem."""

    def __init__(self, message: str, witness: dict[str, Any] | None = None) -> None:
        """Initialize exception."""
        super().__init__(
            message, exit_code=EXIT_THEOREM_VIOLATION, details={"witness": witness or {}}
        )


def validation_errors(exc: ValidationError) -> list[dict[str, Any]]:
    """
    Flatten a Pydantic validation error.

    Args:
        exc: Validation error

    Returns:
        One dict per error with field, message and type
    """
    return [
        {
            "field": ".".join(str(x) for x in error["loc"]),
            "message": error["msg"],
            "type": error["type"],
        }
        for error in exc.errors()
    ]


def exception_to_payload(exc: Exception) -> dict[str, Any]:
    """
    Render any exception as a JSON-safe payload.

    Args:
        exc: Exception raised

    Returns:
        Dict with success flag, message and details
    """
    if isinstance(exc, FlagwalkException):
        return {"success": False, "message": exc.message, "details": exc.details}
    if isinstance(exc, ValidationError):
        return {"success": False, "message": "Validation error", "errors": validation_errors(exc)}
    return {"success": False, "message": "Internal error", "detail": str(exc)}


def exit_code_for(exc: Exception) -> int:
    """Exit code reported for an exception."""
    if isinstance(exc, FlagwalkException):
        return exc.exit_code
    if isinstance(exc, (ValidationError, ValueError)):
        return EXIT_USAGE
    return EXIT_INTERNAL
