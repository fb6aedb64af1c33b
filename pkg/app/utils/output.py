import functools
import logging
from typing import Any, Callable, Iterable, TypeVar

import typer
from rich.console import Console

from app.schemas.verdicts import OutputMode, Verdict
from app.services.sequence_service import format_sequence
from app.utils.exception_handlers import EXIT_DEFECT, AppError, VerdictContractError

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def _console(stderr: bool = False) -> Console:
    # Built per call so the current sys.stdout / sys.stderr is used.
    return Console(stderr=stderr, highlight=False, soft_wrap=True, emoji=False)


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "none"
    if isinstance(value, (list, tuple)):
        return ",".join(str(item) for item in value)
    text = str(getattr(value, "value", value))
    if not text or any(ch.isspace() for ch in text) or '"' in text:
        return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'
    return text


def format_record(fields: dict[str, Any]) -> str:
    """One machine record: `key=value` pairs in the given field order."""
    return " ".join(f"{key}={_format_value(value)}" for key, value in fields.items())


def emit_record(fields: dict[str, Any]) -> None:
    _console().print(format_record(fields), markup=False)


def emit_lines(lines: Iterable[str], stderr: bool = False) -> None:
    console = _console(stderr)
    for line in lines:
        console.print(line, markup=False)


def is_machine(mode: OutputMode | str | None) -> bool:
    return mode is not None and str(getattr(mode, "value", mode)) == OutputMode.MACHINE.value


def verdict_fields(verdict: Verdict, sequence_text: str) -> dict[str, Any]:
    fields: dict[str, Any] = {
        "decision": verdict.decision,
        "condition": verdict.violated_condition,
    }
    if verdict.family_match is not None:
        fields.update(verdict.family_match.parameters)
    fields["pattern"] = verdict.pattern
    fields["sequence"] = sequence_text
    return fields


def verdict_lines(verdict: Verdict, sequence_text: str) -> list[str]:
    lines = [f"{verdict.pattern} {sequence_text}: {verdict.decision.value}"]
    if verdict.violated_condition is not None:
        line = f"violated condition {verdict.violated_condition}"
        if verdict.family_match is not None:
            params = ", ".join(f"{k}={v}" for k, v in verdict.family_match.parameters.items())
            line += f" ({params})"
        lines.append(line)
    return lines


def emit_verdict(verdict: Verdict, sequence_text: str, mode: OutputMode | str | None) -> None:
    if is_machine(mode):
        emit_record(verdict_fields(verdict, sequence_text))
    else:
        emit_lines(verdict_lines(verdict, sequence_text))


def emit_error(exc: AppError, mode: OutputMode | str | None) -> None:
    if isinstance(exc, VerdictContractError):
        emit_verdict(exc.verdict, format_sequence(exc.verdict.sequence), mode)
        return

    if is_machine(mode):
        fields: dict[str, Any] = {"error": exc.code or "app_error", "message": exc.message}
        for key, value in exc.details.items():
            if isinstance(value, (str, int, bool, list, tuple)) or value is None:
                fields[key] = value
        emit_record(fields)
        return

    detail = ", ".join(f"{key}={_format_value(value)}" for key, value in exc.details.items())
    emit_lines([f"error: {exc.message}" + (f" ({detail})" if detail else "")], stderr=True)


def handle_app_errors(func: F) -> F:
    """Turn an error raised by a command into a report plus its exit status."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except (typer.Exit, typer.Abort):
            raise
        except AppError as exc:
            if exc.exit_code == EXIT_DEFECT:
                logger.error("Defect raised: %s %s", exc.message, exc.details)
            else:
                logger.warning("AppError raised: %s", exc.message)
            emit_error(exc, kwargs.get("mode"))
            raise typer.Exit(code=exc.exit_code) from exc
        except Exception as exc:
            logger.exception("Unhandled error in %s", func.__name__)
            emit_error(
                AppError(
                    message=str(exc) or type(exc).__name__,
                    exit_code=EXIT_DEFECT,
                    code="internal_error",
                    details={"type": type(exc).__name__},
                ),
                kwargs.get("mode"),
            )
            raise typer.Exit(code=EXIT_DEFECT) from exc

    return wrapper  # type: ignore[return-value]
