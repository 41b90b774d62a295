import logging
from typing import Any

from lllocal.constants import CommandName, ExitCode
from lllocal.exceptions import (
    AuditError,
    BudgetExceededError,
    InvalidInputError,
    LllocalError,
    PrecisionExhaustedError,
    PreconditionError,
    UnsatisfiableError,
)

logger = logging.getLogger(__name__)

EXIT_CODES: dict[type[LllocalError], ExitCode] = {
    InvalidInputError: ExitCode.INPUT_ERROR,
    PreconditionError: ExitCode.CONDITION_VIOLATED,
    UnsatisfiableError: ExitCode.FAILED,
    BudgetExceededError: ExitCode.FAILED,
    PrecisionExhaustedError: ExitCode.FAILED,
    AuditError: ExitCode.FAILED,
}


def exit_code_for(exc: LllocalError) -> ExitCode:
    for cls in type(exc).__mro__:
        if cls in EXIT_CODES:
            return EXIT_CODES[cls]
    return ExitCode.FAILED


def handle_command_error(command: CommandName, exc: Exception) -> ExitCode:
    """Map a failed command to its stable exit code.

    Exceptions outside the lllocal hierarchy are internal errors: they are
    logged with the traceback and re-raised.

    Args:
        command: The command that was running
        exc: The exception it raised

    Returns:
        The exit code for the process
    """
    if not isinstance(exc, LllocalError):
        logger.error(
            "Unhandled exception occurred",
            extra={"command": command.value, "error": str(exc)},
            exc_info=True,
        )
        raise exc

    code = exit_code_for(exc)
    level = logging.ERROR if isinstance(exc, AuditError) else logging.WARNING
    logger.log(
        level,
        f"{command.value} failed with {type(exc).__name__}: {exc}",
        extra={"command": command.value, "error": str(exc), "exit_code": int(code)},
        exc_info=isinstance(exc, AuditError),
    )
    return code


def error_report(exc: LllocalError) -> dict[str, Any]:
    return {"error": type(exc).__name__, "message": str(exc), "details": exc.details}
