"""Command line interface.

Exit codes: 0 when no error diagnostic is found, 1 when errors are found,
2 on invalid usage or unreadable project files. Program output goes to the
standard output, JSON log events to the standard error.
"""

from argparse import ArgumentParser, Namespace
from collections.abc import Callable, Sequence
from pathlib import Path
import sys

from pydantic import JsonValue

from amdire.catalog import load_catalog
from amdire.codes import list_rules
from amdire.config import SETTINGS
from amdire.exceptions import ProjectError, UsageError
from amdire.info import TOOL_NAME, TOOL_VERSION
from amdire.lifecycle import completeness, milestone_status
from amdire.monitoring import log_error_details, log_phase_event, log_run_event
from amdire.project import Project, load_config, load_project
from amdire.reporting import emit_diagnostics, format_matrix, render_spec, trace_matrix
from amdire.tailoring import default_config
from amdire.types.catalog import DomainProfile
from amdire.types.diagnostics import Severity
from amdire.types.graph import ModelGraph
from amdire.types.project import Invocation
from amdire.types.tailoring import ProjectConfig
from amdire.utils import json_dumps, stderr_print, stdout_write

#: Subcommand handler
type Command = Callable[[Invocation], int]

_ARTEFACTS = ("context", "requirements", "system")


def _parser() -> ArgumentParser:
    """Build the argument parser.

    Returns:
        Parser with one sub-parser per subcommand.
    """
    parser = ArgumentParser(
        prog=TOOL_NAME,
        description="Author, check and render artefact-based requirements specifications.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {TOOL_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def command(name: str, help_text: str) -> ArgumentParser:
        sub = commands.add_parser(name, help=help_text, description=help_text)
        sub.add_argument(
            "--project", default=".", metavar="PATH", help="Project directory (default: .)"
        )
        return sub

    init = command("init", "Scaffold a project with a manifest and three skeleton files.")
    init.add_argument("--name", help="Project name (default: directory name)")
    init.add_argument(
        "--domain-profile", choices=[profile.value for profile in DomainProfile], default="both"
    )
    init.add_argument("--force", action="store_true", help="Overwrite existing files")

    check = command("check", "Parse, link, tailor and validate a project.")
    check.add_argument("--format", choices=("human", "json"), default="human")

    tailor = command("tailor", "Print the effective content items and tailoring decisions.")
    tailor.add_argument("--format", choices=("human", "json"), default="human")

    trace = command("trace", "Print a traceability matrix between two concept kinds.")
    trace.add_argument("--from", dest="from_kind", required=True, metavar="KIND")
    trace.add_argument("--to", dest="to_kind", required=True, metavar="KIND")
    trace.add_argument("--format", choices=("table", "json"), default="table")

    render = command("render", "Render a specification document.")
    render.add_argument("--artefact", choices=_ARTEFACTS, required=True)
    render.add_argument("--format", choices=("markdown", "ardl"), default="markdown")
    render.add_argument("--out", metavar="PATH", help="Output file (default: standard output)")

    stats = command("stats", "Print catalog and project counts with milestone status.")
    stats.add_argument("--format", choices=("human", "json"), default="human")

    rules = command("rules", "List the diagnostic codes.")
    rules.add_argument("--format", choices=("human", "json"), default="human")
    return parser


def _invocation(args: Namespace) -> Invocation:
    flags = {
        key: value
        for key, value in vars(args).items()
        if key not in {"command", "project"}
    }
    return Invocation(
        subcommand=args.command, project_path=Path(args.project), flags=flags
    )


def _flag(invocation: Invocation, name: str) -> str:
    return str(invocation.flags[name])


def _color() -> bool:
    return not SETTINGS.no_color and sys.stdout.isatty()


def _init(invocation: Invocation) -> int:
    """Scaffold a project.

    Args:
        invocation: Invocation.

    Returns:
        Exit code.
    """
    root = invocation.project_path
    catalog = load_catalog()
    manifest = root / SETTINGS.manifest_name
    if manifest.exists() and not invocation.flags.get("force"):
        msg = f"'{manifest}' already exists, use --force to overwrite"
        raise UsageError(msg)
    name = str(invocation.flags.get("name") or root.resolve().name)
    profile = DomainProfile(_flag(invocation, "domain_profile"))
    config = default_config(catalog, profile, name)
    graph = ModelGraph(project=name)
    lines = [
        "# AMDiRE project manifest",
        f"name: {name}",
        f"domain-profile: {profile}",
        *(
            f"alias {alias}: {alias}.ardl"
            for alias in (artefact.alias for artefact in catalog.artefact_types)
        ),
    ]
    try:
        root.mkdir(parents=True, exist_ok=True)
        manifest.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
        created = [manifest]
        for artefact in catalog.artefact_types:
            path = root / f"{artefact.alias}.ardl"
            document = render_spec(graph, artefact.id, "ardl", config=config, catalog=catalog)
            path.write_text(document.body, encoding="utf-8", newline="\n")
            created.append(path)
    except OSError as error:
        msg = f"Unable to write the project in '{root}': {error.strerror}"
        raise ProjectError(msg) from None
    stdout_write("\n".join(f"created {path}" for path in created))
    return 0


def _check(invocation: Invocation) -> int:
    project = load_project(invocation.project_path)
    stdout_write(
        emit_diagnostics(
            project.diagnostics,
            "json" if _flag(invocation, "format") == "json" else "human",
            rules_off=project.config.rules_off,
            color=_color(),
        )
    )
    return 1 if project.has_errors else 0


def _tailoring_report(config: ProjectConfig) -> dict[str, JsonValue]:
    catalog = load_catalog()
    return {
        "domain_profile": config.domain_profile.value,
        "items": {artefact: list(items) for artefact, items in config.items.items()},
        "disabled": [
            {"item": item, "justification": config.justifications.get(item, "")}
            for item in sorted(config.disabled)
        ],
        "roles": {
            role.id: config.roles.get(role.id, "") for role in catalog.roles
        },
        "decisions": [
            decision.model_dump(mode="json") for decision in config.decisions
        ],
        "import_candidates": sorted(config.import_candidates),
    }


def _tailor(invocation: Invocation) -> int:
    """Print the effective configuration.

    Args:
        invocation: Invocation.

    Returns:
        Exit code, 1 if tailoring reports errors.
    """
    catalog = load_catalog()
    manifest, config = load_config(invocation.project_path, catalog)
    diagnostics = [*manifest.diagnostics, *config.diagnostics]
    if _flag(invocation, "format") == "json":
        report = _tailoring_report(config)
        report["diagnostics"] = [
            diagnostic.model_dump(mode="json") for diagnostic in diagnostics
        ]
        stdout_write(json_dumps(report, indent=2))
    else:
        lines = [f"Domain profile: {config.domain_profile}"]
        for artefact in catalog.artefact_types:
            items = config.items.get(artefact.id, ())
            lines.append(f"{artefact.display_name} ({len(items)} items):")
            lines.extend(
                f"  {catalog.content_item(item).display_name}"
                + (" [mandatory]" if item in config.locked_items else "")
                + (" [import candidate]" if item in config.import_candidates else "")
                for item in items
            )
        if config.disabled:
            lines.append("Disabled:")
            lines.extend(
                f"  {item}: {config.justifications.get(item, '')}"
                for item in sorted(config.disabled)
            )
        if config.roles:
            lines.append("Roles:")
            lines.extend(f"  {role}: {person}" for role, person in sorted(config.roles.items()))
        if config.decisions:
            lines.append("Decisions:")
            lines.extend(
                f"  {decision.factor}={decision.value} -> {decision.item} "
                f"{decision.effect}: {decision.note}"
                for decision in config.decisions
            )
        stdout_write("\n".join(lines))
        if diagnostics:
            stdout_write(emit_diagnostics(diagnostics, color=_color()))
    return 1 if any(d.severity is Severity.ERROR for d in diagnostics) else 0


def _trace(invocation: Invocation) -> int:
    project = load_project(invocation.project_path)
    matrix = trace_matrix(
        project.graph,
        _flag(invocation, "from_kind"),
        _flag(invocation, "to_kind"),
        load_catalog(),
    )
    if _flag(invocation, "format") == "json":
        report = matrix.model_dump(mode="json")
        report["coverage"] = matrix.coverage
        stdout_write(json_dumps(report, indent=2))
    else:
        stdout_write(format_matrix(matrix))
    return 0


def _render(invocation: Invocation) -> int:
    """Render a document.

    Args:
        invocation: Invocation.

    Returns:
        Exit code.
    """
    project = load_project(invocation.project_path)
    with log_phase_event("render", str(invocation.project_path)):
        document = render_spec(
            project.graph,
            _flag(invocation, "artefact"),
            _flag(invocation, "format"),
            config=project.config,
            milestones=milestone_status(
                project.graph, project.config, diagnostics=project.diagnostics
            ),
        )
    out = invocation.flags.get("out")
    if out:
        try:
            Path(str(out)).write_text(document.body, encoding="utf-8", newline="\n")
        except OSError as error:
            msg = f"Unable to write '{out}': {error.strerror}"
            raise ProjectError(msg) from None
    else:
        stdout_write(document.body)
    return 0


def _stats_report(project: Project) -> dict[str, JsonValue]:
    catalog = load_catalog()
    graph = project.graph
    diagnostics = project.diagnostics
    return {
        "catalog": {
            "artefact_types": len(catalog.artefact_types),
            "content_items": len(catalog.content_items),
            "concepts": len(catalog.concepts),
            "relation_rules": len(catalog.relation_rules),
            "roles": len(catalog.roles),
            "milestones": len(catalog.milestones),
        },
        "project": {
            "name": project.config.name,
            "domain_profile": project.config.domain_profile.value,
            "elements": len(graph.elements),
            "edges": len(graph.edges),
            "elements_per_artefact": {
                artefact: len(ids) for artefact, ids in graph.partitions.items()
            },
        },
        "milestones": {
            status.milestone: status.reached
            for status in milestone_status(graph, project.config, diagnostics=diagnostics)
        },
        "completeness": {
            artefact.id: completeness(
                graph, project.config, artefact.id, diagnostics=diagnostics
            ).ratio
            for artefact in catalog.artefact_types
        },
    }


def _stats(invocation: Invocation) -> int:
    report = _stats_report(load_project(invocation.project_path))
    if _flag(invocation, "format") == "json":
        stdout_write(json_dumps(report, indent=2))
        return 0
    lines = []
    for section, values in report.items():
        lines.append(f"{section.capitalize()}:")
        for key, value in values.items():  # type: ignore[union-attr]
            if isinstance(value, dict):
                lines.append(f"  {key}:")
                lines.extend(f"    {name}: {count}" for name, count in value.items())
            elif isinstance(value, bool):
                lines.append(f"  {key}: {'reached' if value else 'not reached'}")
            elif isinstance(value, float):
                lines.append(f"  {key}: {value:.0%}")
            else:
                lines.append(f"  {key}: {value}")
    stdout_write("\n".join(lines))
    return 0


def _rules(invocation: Invocation) -> int:
    rules = list_rules()
    if _flag(invocation, "format") == "json":
        stdout_write(
            json_dumps([rule.model_dump(mode="json") for rule in rules], indent=2)
        )
    else:
        stdout_write(
            "\n".join(
                f"{rule.code}  {rule.default_severity:<7}  {rule.phase:<8}  {rule.title}"
                for rule in rules
            )
        )
    return 0


#: Subcommand handlers
COMMANDS: dict[str, Command] = {
    "init": _init,
    "check": _check,
    "tailor": _tailor,
    "trace": _trace,
    "render": _render,
    "stats": _stats,
    "rules": _rules,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Run one command.

    Args:
        argv: Arguments without the program name, `sys.argv` by default.

    Returns:
        Exit code.
    """
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else 2
    invocation = _invocation(args)
    with log_run_event(invocation.subcommand, str(invocation.project_path)) as log:
        try:
            code = COMMANDS[invocation.subcommand](invocation)
        except (UsageError, ProjectError) as error:
            log_error_details(log, str(error), level="error")
            stderr_print(f"{TOOL_NAME}: error: {error}")
            code = 2
        log["exit_code"] = code
    return code


def main() -> None:
    """Console script entry point."""
    raise SystemExit(run())
