import logging

import pytest

from lllocal.constants import CommandName, ExitCode
from lllocal.exception_handlers import error_report, exit_code_for, handle_command_error
from lllocal.exceptions import (
    AuditError,
    BudgetExceededError,
    InvalidInputError,
    LllocalError,
    PrecisionExhaustedError,
    PreconditionError,
    UnsatisfiableError,
)


@pytest.mark.parametrize(
    "exc,code",
    [
        (InvalidInputError("bad"), ExitCode.INPUT_ERROR),
        (PreconditionError("no"), ExitCode.CONDITION_VIOLATED),
        (UnsatisfiableError("none"), ExitCode.FAILED),
        (BudgetExceededError("big"), ExitCode.FAILED),
        (PrecisionExhaustedError("close"), ExitCode.FAILED),
        (AuditError("bug"), ExitCode.FAILED),
        (LllocalError("other"), ExitCode.FAILED),
    ],
)
def test_exit_codes(exc, code):
    assert exit_code_for(exc) == code


def test_subclasses_inherit_their_parent_code():
    class MissingFile(InvalidInputError):
        pass

    assert exit_code_for(MissingFile("gone")) == ExitCode.INPUT_ERROR


def test_handled_errors_are_logged_with_context(caplog):
    with caplog.at_level(logging.WARNING):
        code = handle_command_error(CommandName.SOLVE, PreconditionError("condition fails"))
    assert code == ExitCode.CONDITION_VIOLATED
    record = caplog.records[-1]
    assert record.levelno == logging.WARNING
    assert record.command == "solve"
    assert record.exit_code == 3


def test_audit_errors_log_at_error_level(caplog):
    with caplog.at_level(logging.WARNING):
        handle_command_error(CommandName.SCHREIER, AuditError("not proper"))
    assert caplog.records[-1].levelno == logging.ERROR


def test_foreign_exceptions_are_reraised(caplog):
    with pytest.raises(ZeroDivisionError):
        handle_command_error(CommandName.CHECK, ZeroDivisionError("boom"))
    assert caplog.records[-1].message == "Unhandled exception occurred"


def test_error_report():
    report = error_report(BudgetExceededError("too many", details={"cap": 4}))
    assert report == {"error": "BudgetExceededError", "message": "too many", "details": {"cap": 4}}
    assert error_report(AuditError("x"))["details"] == {}
