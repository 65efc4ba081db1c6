"""OpenTelemetry tracing of commands and pipeline phases.

Tracing is optional: without `AMDIRE_OTEL_ENABLED` a no-op tracer is used and
the `opentelemetry` extra does not need to be installed.
"""

from collections.abc import Generator, Mapping
from contextlib import contextmanager
from typing import TYPE_CHECKING

from amdire.config import SETTINGS
from amdire.info import TOOL_VERSION

if TYPE_CHECKING:
    from opentelemetry.sdk.trace import TracerProvider
    from opentelemetry.sdk.trace.export import SpanExporter
    from opentelemetry.trace import Span, Tracer

#: Span attribute value
type AttributeValue = str | int


class PhaseTracer:
    """No-op tracer."""

    @contextmanager
    def span(
        self, name: str, attributes: Mapping[str, AttributeValue]  # noqa: ARG002
    ) -> "Generator[Span | None]":
        """Trace a block of work.

        Args:
            name: Span name, the command or phase.
            attributes: Span attributes.

        Yields:
            The active span, None when tracing is disabled.
        """
        yield None

    def flush(self) -> None:
        """Export pending spans."""


class OtlpPhaseTracer(PhaseTracer):
    """Tracer exporting spans over OTLP/HTTP."""

    __slots__ = ("_provider", "_tracer")

    def __init__(self, exporter: "SpanExporter | None" = None) -> None:
        """Configure the tracer provider from the settings.

        Args:
            exporter: Span exporter, OTLP/HTTP to the configured endpoint by
                default. A given exporter leaves the global provider untouched.
        """
        from opentelemetry import trace  # noqa: PLC0415
        from opentelemetry.exporter.otlp.proto.http.trace_exporter import (  # noqa: PLC0415
            OTLPSpanExporter,
        )
        from opentelemetry.sdk.resources import Resource  # noqa: PLC0415
        from opentelemetry.sdk.trace import TracerProvider  # noqa: PLC0415
        from opentelemetry.sdk.trace.export import BatchSpanProcessor  # noqa: PLC0415
        from opentelemetry.sdk.trace.sampling import TraceIdRatioBased  # noqa: PLC0415

        self._provider: TracerProvider = TracerProvider(
            resource=Resource.create(
                {"service.name": SETTINGS.otel_service_name, "service.version": TOOL_VERSION}
            ),
            sampler=TraceIdRatioBased(SETTINGS.otel_sample_rate),
        )
        self._provider.add_span_processor(
            BatchSpanProcessor(
                exporter or OTLPSpanExporter(endpoint=SETTINGS.otel_exporter_endpoint),
                schedule_delay_millis=200,
                export_timeout_millis=10000,
            )
        )
        if exporter is None:
            trace.set_tracer_provider(self._provider)
        self._tracer: Tracer = self._provider.get_tracer(__name__)

    @contextmanager
    def span(
        self, name: str, attributes: Mapping[str, AttributeValue]
    ) -> "Generator[Span | None]":
        """Trace a block of work, marking the span as failed on exceptions.

        Args:
            name: Span name, the command or phase.
            attributes: Span attributes.

        Yields:
            The active span.
        """
        from opentelemetry.trace import Status, StatusCode  # noqa: PLC0415

        with self._tracer.start_as_current_span(
            name,
            attributes=dict(attributes),
            record_exception=False,
            set_status_on_exception=False,
        ) as span:
            try:
                yield span
            except Exception as exc:
                span.set_status(Status(StatusCode.ERROR, str(exc)))
                span.set_attribute("error", value=True)
                raise

    def flush(self) -> None:
        """Export pending spans, keeping the provider usable for later runs."""
        self._provider.force_flush()


def create_tracer() -> PhaseTracer:
    """Create the tracer selected by the settings.

    Returns:
        OTLP tracer if tracing is enabled, a no-op tracer otherwise.
    """
    return OtlpPhaseTracer() if SETTINGS.otel_enabled else PhaseTracer()


def annotate(span: "Span | None", attributes: Mapping[str, AttributeValue]) -> None:
    """Add attributes to a span, if any.

    Args:
        span: Span, or None when tracing is disabled.
        attributes: Attributes to set.
    """
    if span is not None:
        span.set_attributes(dict(attributes))

