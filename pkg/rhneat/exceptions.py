"""
Exception definitions for rhneat

Every error raised by the library derives from RhneatException and carries a
stable error code plus a details mapping for logs and result files.
"""

from typing import Any, Optional

from .types import (
    ERR_BUDGET_EXHAUSTED,
    ERR_CYCLE,
    ERR_INPUT_SIZE,
    ERR_INVALID_ACTION,
    ERR_INVALID_GENOME,
    ERR_MISCONFIGURED,
    ERR_SCHEMA_CHANGED,
    ERR_UNKNOWN_GAME,
)


class RhneatException(Exception):
    """Base exception for rhneat"""

    def __init__(
        self,
        message: str,
        code: str,
        details: Optional[dict[str, Any]] = None,
    ):
        super().__init__(message)
        self.message = message
        self.code = code
        self.details = details or {}


class GenomeError(RhneatException, ValueError):
    """Invalid genome construction or recombination"""

    def __init__(
        self,
        message: str = "Invalid genome",
        code: str = ERR_INVALID_GENOME,
        details: Optional[dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)


class CycleError(GenomeError):
    """Enabled connections form a cycle"""

    def __init__(
        self,
        message: str = "Cycle detected: feed-forward constraint violated",
        details: Optional[dict[str, Any]] = None,
    ):
        super().__init__(message=message, code=ERR_CYCLE, details=details)


class GameError(RhneatException, ValueError):
    """Unknown games or levels, malformed level files, illegal actions"""

    def __init__(
        self,
        message: str = "Unknown game",
        code: str = ERR_UNKNOWN_GAME,
        details: Optional[dict[str, Any]] = None,
    ):
        super().__init__(message, code, details)


class InvalidActionError(GameError):
    """Action index outside the game's action range"""

    def __init__(self, action: int, action_count: int):
        super().__init__(
            message=f"Action {action} outside [0, {action_count})",
            code=ERR_INVALID_ACTION,
            details={"action": action, "actionCount": action_count},
        )
        self.action = action
        self.action_count = action_count


class SchemaChangedError(RhneatException):
    """The feature schema of a state differs from the one expected"""

    def __init__(self, expected: Any, actual: Any):
        super().__init__(
            message="Feature schema changed",
            code=ERR_SCHEMA_CHANGED,
            details={"expected": repr(expected), "actual": repr(actual)},
        )
        self.expected = expected
        self.actual = actual


class BudgetExhaustedError(RhneatException):
    """A forward model call was attempted with no budget left"""

    def __init__(self, limit: int):
        super().__init__(
            message=f"Forward model budget of {limit} calls exhausted",
            code=ERR_BUDGET_EXHAUSTED,
            details={"limit": limit},
        )
        self.limit = limit


class InputSizeError(RhneatException, ValueError):
    """Network input vector has the wrong length"""

    def __init__(self, expected: int, actual: int):
        super().__init__(
            message=f"Expected {expected} inputs, got {actual}",
            code=ERR_INPUT_SIZE,
            details={"expected": expected, "actual": actual},
        )


class ConfigurationError(RhneatException, ValueError):
    """Invalid parameters or experiment configuration"""

    def __init__(
        self,
        message: str = "Invalid configuration",
        details: Optional[dict[str, Any]] = None,
    ):
        super().__init__(message=message, code=ERR_MISCONFIGURED, details=details)
