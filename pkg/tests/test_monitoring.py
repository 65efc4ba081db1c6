"""Tests for JSON event logs."""

import json
from typing import TYPE_CHECKING

import pytest

from amdire import monitoring
from amdire.monitoring import log_error_details, log_phase_event, log_run_event
from amdire.tracing import OtlpPhaseTracer, PhaseTracer

if TYPE_CHECKING:
    from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter


@pytest.fixture
def published(monkeypatch: pytest.MonkeyPatch) -> None:
    """Publish every log level."""
    monkeypatch.setattr(
        monitoring, "_PUBLISHED_LOG_LEVELS", {"info", "warning", "error", "critical"}
    )


@pytest.mark.usefixtures("published")
class TestEvents:
    """Run and phase events."""

    def test_phase(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Phase events carry counts and timing."""
        with log_phase_event("link", "atm") as log:
            log["counts"] = {"elements": 3}
        event = json.loads(capsys.readouterr().err)
        assert (event["type"], event["phase"], event["project"]) == ("phase", "link", "atm")
        assert event["counts"] == {"elements": 3}
        assert event["execution_time_ms"] >= 0
        assert event["level"] == "info"

    def test_run_error(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Error details raise the event level."""
        with log_run_event("check", ".") as log:
            log_error_details(log, "File not found", level="error")
            log["exit_code"] = 2
        event = json.loads(capsys.readouterr().err)
        assert event["level"] == "error"
        assert event["error_detail"] == ["File not found"]
        assert event["exit_code"] == 2

    def test_exception(self, capsys: pytest.CaptureFixture[str]) -> None:
        """Unexpected exceptions are logged as critical and re-raised."""
        msg = "boom"
        with pytest.raises(RuntimeError), log_phase_event("parse"):
            raise RuntimeError(msg)
        event = json.loads(capsys.readouterr().err)
        assert event["level"] == "critical"
        assert "RuntimeError: boom" in event["error_detail"][0]


def test_level_filter(
    capsys: pytest.CaptureFixture[str], monkeypatch: pytest.MonkeyPatch
) -> None:
    """Events below the configured level are not written."""
    monkeypatch.setattr(monitoring, "_PUBLISHED_LOG_LEVELS", {"critical"})
    with log_phase_event("render"):
        pass
    assert capsys.readouterr().err == ""


def test_tracing_disabled() -> None:
    """Tests run with the no-op tracer."""
    assert type(monitoring.tracer) is PhaseTracer


class TestOtlpTracer:
    """Spans exported by the OpenTelemetry tracer."""

    @pytest.fixture
    def exporter(self, monkeypatch: pytest.MonkeyPatch) -> "InMemorySpanExporter":
        """Route command and phase spans to memory."""
        from opentelemetry.sdk.trace.export.in_memory_span_exporter import (  # noqa: PLC0415
            InMemorySpanExporter,
        )

        exporter = InMemorySpanExporter()
        monkeypatch.setattr(monitoring, "tracer", OtlpPhaseTracer(exporter))
        return exporter

    def test_phase_spans(self, exporter: "InMemorySpanExporter") -> None:
        """Phase spans nest in the command span and carry the counts."""
        with log_run_event("check", "atm"), log_phase_event("link", "atm") as log:
            log["counts"] = {"elements": 3, "edges": 2}
        spans = {span.name: span for span in exporter.get_finished_spans()}
        assert set(spans) == {"check", "link"}
        link = spans["link"]
        assert link.attributes is not None
        assert link.attributes["amdire.phase"] == "link"
        assert link.attributes["amdire.elements"] == 3
        assert link.attributes["amdire.edges"] == 2
        assert link.parent is not None
        assert link.parent.span_id == spans["check"].context.span_id

    def test_failed_phase(self, exporter: "InMemorySpanExporter") -> None:
        """A failing phase marks its span as an error."""
        from opentelemetry.trace import StatusCode  # noqa: PLC0415

        msg = "boom"
        with (
            pytest.raises(RuntimeError),
            log_run_event("check", "atm"),
            log_phase_event("parse"),
        ):
            raise RuntimeError(msg)
        spans = {span.name: span for span in exporter.get_finished_spans()}
        assert spans["parse"].status.status_code is StatusCode.ERROR
        assert spans["check"].status.status_code is StatusCode.ERROR

    def test_flush_keeps_exporting(self, exporter: "InMemorySpanExporter") -> None:
        """Spans of a second run are exported after the first flush."""
        for command in ("check", "stats"):
            with log_run_event(command, "atm"):
                pass
        assert [span.name for span in exporter.get_finished_spans()] == ["check", "stats"]
