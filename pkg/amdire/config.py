"""Configuration management using Pydantic models.

This module centralizes all environment variable configuration of the
toolchain. Project-specific decisions (domain profile, tailoring, severity
overrides) are not environment settings: they live in the project manifest
and tailoring files, see `amdire.manifest`.

Environment Variable Examples:
    AMDIRE_NO_COLOR=1
    AMDIRE_LOG_LEVEL=info
    AMDIRE_OTEL_ENABLED=true

For detailed configuration options, see the _Settings class documentation.
"""

from datetime import datetime
from typing import Literal
from zoneinfo import ZoneInfo, ZoneInfoNotFoundError, available_timezones

from pydantic import AwareDatetime, Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from amdire.info import RUN_NAME, TOOL_VERSION
from amdire.utils import stderr_write

#: Logging levels
LogLevel = Literal["info", "warning", "error", "critical"]


class _Settings(BaseSettings):
    """Toolchain configuration loaded from environment variables.

    Configuration Categories:
    1. **Output**: colour handling of human-readable output
    2. **Project layout**: manifest file name
    3. **Observability**: JSON event logs and OpenTelemetry tracing

    Environment Variable Examples:
        AMDIRE_NO_COLOR=1
        AMDIRE_LOG_LEVEL=info
        AMDIRE_MANIFEST_NAME=amdire-project.txt
        AMDIRE_OTEL_ENABLED=true
        AMDIRE_OTEL_SAMPLE_RATE=0.1
    """

    model_config = SettingsConfigDict(env_prefix="AMDIRE_", env_ignore_empty=True)

    no_color: bool = Field(
        default=False,
        description=(
            "Disable ANSI colour in human-readable output. Colour is also "
            "disabled automatically when the standard output is not a terminal."
        ),
    )

    manifest_name: str = Field(
        default="amdire-project.txt",
        description="File name of the project manifest inside a project directory.",
    )

    timezone: ZoneInfo = Field(
        default=ZoneInfo("UTC"), description="Timezone for log event dates"
    )

    log_level: LogLevel | Literal["disabled"] = Field(
        default="warning",
        description=(
            "Minimum logging level to output. Log events are JSON lines written "
            "to STDERR, so they never mix with diagnostics or rendered documents. "
            "Log levels in order of severity: info < warning < error < critical. "
            "Set to 'info' to get per-phase timings and counts."
        ),
    )

    otel_enabled: bool = Field(
        default=False,
        description=(
            "Enable OpenTelemetry tracing of pipeline phases (read, parse, link, "
            "tailor, validate, render). Requires the 'opentelemetry' extra."
        ),
    )

    otel_service_name: str = Field(
        default="amdire", description="Service name identifier for OpenTelemetry traces."
    )

    otel_exporter_endpoint: str = Field(
        default="http://127.0.0.1:4318/v1/traces",
        description="OpenTelemetry traces export endpoint URL (OTLP over HTTP).",
    )

    otel_sample_rate: float = Field(
        default=1.0,
        ge=0.0,
        le=1.0,
        description="OpenTelemetry trace sampling rate (0.0 to 1.0).",
    )

    @field_validator("timezone", mode="before")
    @classmethod
    def _parse_timezone(cls, value: ZoneInfo | str) -> ZoneInfo:
        """Parse and validate timezone from environment variable or ZoneInfo object.

        Args:
            value: Either a timezone string (e.g., "Europe/Berlin", "UTC")
                  or an existing ZoneInfo object.

        Returns:
            Validated ZoneInfo object for the specified timezone.

        Raises:
            ValueError: When the timezone string is not a valid IANA identifier.
        """
        if isinstance(value, str):
            try:
                return ZoneInfo(value)
            except (ZoneInfoNotFoundError, ValueError):
                msg = f'Invalid timezone "{value}", possible values: {", ".join(sorted(available_timezones()))}.'
                raise ValueError(msg) from None
        return value

    def now(self) -> AwareDatetime:
        """Returns the current date and time based on the specified timezone.

        Returns:
            datetime: The current date and time adjusted to the configured timezone.
        """
        return datetime.now(self.timezone)


try:
    SETTINGS = _Settings()
except ValidationError as error:
    import sys

    stderr_write(
        {
            "type": "start",
            "level": "error",
            "date": datetime.now(ZoneInfo("UTC")).isoformat(),
            "run_id": RUN_NAME,
            "tool_version": TOOL_VERSION,
            "error_detail": [
                {
                    "message": "Configuration validation failed. Verify your environment variables and try again.",
                    "details": error.errors(  # type: ignore[dict-item]
                        include_url=False, include_context=False, include_input=False
                    ),
                }
            ],
        }
    )
    sys.exit(2)
