"""Monitoring."""

from collections.abc import Generator
from contextlib import contextmanager
from time import perf_counter_ns
from traceback import format_exception
from typing import Literal, NotRequired, TypedDict

from pydantic import AwareDatetime, JsonValue

from amdire.config import SETTINGS, LogLevel
from amdire.info import RUN_NAME, TOOL_VERSION
from amdire.tracing import annotate, create_tracer
from amdire.utils import stderr_write

#: Tracer of commands and phases
tracer = create_tracer()

#: Pipeline phases
Phase = Literal["read", "parse", "link", "tailor", "validate", "render"]


class EventLog(TypedDict):
    """Event log fields."""

    type: Literal["start", "run", "phase"]
    level: LogLevel
    date: AwareDatetime
    error_detail: NotRequired[list[JsonValue]]
    run_id: str
    tool_version: str

    # "run" + "phase" type
    execution_time_ms: NotRequired[int]
    project: NotRequired[str]

    # "run" type
    command: NotRequired[str]
    exit_code: NotRequired[int]

    # "phase" type
    phase: NotRequired[Phase]
    counts: NotRequired[dict[str, int]]


#: Sorted log levels
_SORTED_LOG_LEVELS: tuple[LogLevel, ...] = ("info", "warning", "error", "critical")


def _init_log_levels() -> set[LogLevel]:
    """Initializes a set of log levels based on the current application setting.

    Returns:
        set[LogLevel]: A set containing log levels lower or equal to the
        configured log level.
    """
    levels: set[LogLevel] = set()
    if SETTINGS.log_level == "disabled":
        return levels
    for level in reversed(_SORTED_LOG_LEVELS):
        levels.add(level)
        if level == SETTINGS.log_level:
            break
    return levels


#: Log levels to publish
_PUBLISHED_LOG_LEVELS = _init_log_levels()
del _init_log_levels


def write_log_event(log: EventLog) -> None:
    """Writes a log event to the standard error in JSON format.

    Args:
        log: The log event to be written, represented as an `EventLog` object.
    """
    if log["level"] in _PUBLISHED_LOG_LEVELS:
        stderr_write(log)  # type: ignore[arg-type]


def log_error_details(
    log: EventLog, *error_detail: JsonValue, level: LogLevel | None = None
) -> None:
    """Logs error details into an event.

    Args:
        log: The event to update.
        *error_detail: Variable length argument list of error details to be
            logged. Each item should be a JSON-compatible value.
        level: Optional. Logging level to specify the severity of the error.
    """
    log.setdefault("error_detail", []).extend(error_detail)
    if level and _SORTED_LOG_LEVELS.index(level) > _SORTED_LOG_LEVELS.index(
        log["level"]
    ):
        log["level"] = level


@contextmanager
def _timed_event(
    log: EventLog, span_name: str, attributes: dict[str, str | int]
) -> Generator[EventLog]:
    """Time an event, trace it, and write it on exit.

    Args:
        log: The event to time.
        span_name: Span name.
        attributes: Span attributes.
    """
    start = perf_counter_ns()
    with tracer.span(span_name, attributes) as span:
        try:
            yield log
        except Exception as exc:
            log["level"] = "critical"
            log.setdefault("error_detail", []).append("\n".join(format_exception(exc)))
            raise
        finally:
            log["execution_time_ms"] = (perf_counter_ns() - start) // 1000000
            annotate(
                span,
                {
                    "duration_ms": log["execution_time_ms"],
                    **{f"amdire.{name}": value for name, value in log.get("counts", {}).items()},
                },
            )
            write_log_event(log)


@contextmanager
def log_run_event(command: str, project: str) -> Generator[EventLog]:
    """Context manager to log a whole command invocation.

    Args:
        command: CLI subcommand.
        project: Project directory.
    """
    log = EventLog(
        type="run",
        level="info",
        date=SETTINGS.now(),
        run_id=RUN_NAME,
        tool_version=TOOL_VERSION,
        command=command,
        project=project,
    )
    try:
        with _timed_event(
            log, command, {"amdire.command": command, "amdire.run_id": RUN_NAME}
        ):
            yield log
    finally:
        tracer.flush()


@contextmanager
def log_phase_event(phase: Phase, project: str = "") -> Generator[EventLog]:
    """Context manager to log a pipeline phase.

    The caller may store element or diagnostic counts in the `counts` field.

    Args:
        phase: Pipeline phase.
        project: Project name or directory.
    """
    log = EventLog(
        type="phase",
        level="info",
        date=SETTINGS.now(),
        run_id=RUN_NAME,
        tool_version=TOOL_VERSION,
        phase=phase,
        project=project,
    )
    with _timed_event(log, phase, {"amdire.phase": phase, "amdire.run_id": RUN_NAME}):
        yield log
