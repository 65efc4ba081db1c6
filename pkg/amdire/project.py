"""Project loading: manifest, tailoring, parse, link and validate.

Files are read and parsed concurrently in worker threads, results are always
combined in manifest order so the output does not depend on scheduling.
"""

from asyncio import gather, run, to_thread
from pathlib import Path

from amdire.ardl import parse
from amdire.catalog import Catalog, load_catalog
from amdire.config import SETTINGS
from amdire.exceptions import ProjectError
from amdire.linker import link
from amdire.manifest import parse_manifest, parse_tailoring
from amdire.monitoring import log_phase_event
from amdire.tailoring import effective_items, static_tailor
from amdire.types import FrozenModel
from amdire.types.diagnostics import Diagnostic, sort_diagnostics
from amdire.types.graph import ModelGraph
from amdire.types.project import Manifest
from amdire.types.syntax import ParsedFile, SourceFile
from amdire.types.tailoring import ProjectConfig
from amdire.validator import apply_config, validate


class Project(FrozenModel):
    """Loaded project."""

    root: Path
    manifest: Manifest
    config: ProjectConfig
    graph: ModelGraph
    diagnostics: tuple[Diagnostic, ...] = ()

    @property
    def has_errors(self) -> bool:
        """True if any diagnostic has error severity."""
        return any(diagnostic.severity == "error" for diagnostic in self.diagnostics)


async def _read(root: Path, name: str) -> str:
    """Read a project file.

    Args:
        root: Project directory.
        name: Path relative to the project directory.

    Returns:
        File content.

    Raises:
        ProjectError: The file is missing, unreadable, or not UTF-8.
    """
    try:
        return await to_thread((root / name).read_text, encoding="utf-8")
    except FileNotFoundError:
        msg = f"File not found: '{root / name}'"
        raise ProjectError(msg) from None
    except UnicodeDecodeError:
        msg = f"File is not UTF-8 encoded: '{root / name}'"
        raise ProjectError(msg) from None
    except OSError as error:
        msg = f"Unable to read '{root / name}': {error.strerror}"
        raise ProjectError(msg) from None


async def _load_config(root: Path, catalog: Catalog) -> tuple[Manifest, ProjectConfig]:
    """Read the manifest and tailoring files of a project.

    Args:
        root: Project directory.
        catalog: Catalog.

    Returns:
        Manifest and effective configuration.
    """
    project = str(root)
    with log_phase_event("read", project) as log:
        manifest_name = SETTINGS.manifest_name
        if not (root / manifest_name).is_file():
            msg = f"No '{manifest_name}' found in '{root}'"
            raise ProjectError(msg)
        manifest = parse_manifest(manifest_name, await _read(root, manifest_name))
        tailoring = await gather(*(_read(root, name) for name in manifest.tailoring))
        log["counts"] = {"tailoring_files": len(tailoring)}
    with log_phase_event("tailor", project) as log:
        profiles = []
        diagnostics: list[Diagnostic] = []
        for name, content in zip(manifest.tailoring, tailoring, strict=True):
            profile, found = parse_tailoring(name, content, catalog)
            profiles.append(profile)
            diagnostics.extend(found)
        effective = effective_items(
            catalog, profiles, domain_profile=manifest.domain_profile
        )
        config = static_tailor(effective, catalog=catalog)
        config = config.model_copy(
            update={
                "name": manifest.name or root.resolve().name,
                "manifest": manifest_name,
                "severity_overrides": manifest.severity_overrides,
                "glossary_check": manifest.glossary_check,
                "milestone_threshold": manifest.milestone_threshold,
                "diagnostics": tuple(sort_diagnostics([*diagnostics, *config.diagnostics])),
            }
        )
        log["counts"] = {
            "enabled_items": sum(len(items) for items in config.items.values()),
            "decisions": len(config.decisions),
        }
    return manifest, config


def load_config(root: Path | str, catalog: Catalog | None = None) -> tuple[Manifest, ProjectConfig]:
    """Read the manifest and tailoring files of a project.

    Args:
        root: Project directory.
        catalog: Catalog, the embedded one by default.

    Returns:
        Manifest and effective configuration.
    """
    return run(_load_config(Path(root), catalog or load_catalog()))


async def load_project_async(root: Path | str, catalog: Catalog | None = None) -> Project:
    """Load, link and validate a project.

    Args:
        root: Project directory.
        catalog: Catalog, the embedded one by default.

    Returns:
        Project with every diagnostic, tailoring and overrides applied.

    Raises:
        ProjectError: A project file cannot be read.
    """
    root = Path(root)
    catalog = catalog or load_catalog()
    manifest, config = await _load_config(root, catalog)
    project = str(root)
    with log_phase_event("read", project) as log:
        contents = await gather(*(_read(root, alias.path) for alias in manifest.aliases))
        log["counts"] = {"files": len(contents)}
    with log_phase_event("parse", project) as log:
        results = await gather(
            *(
                to_thread(parse, SourceFile(path=alias.path, content=content), catalog)
                for alias, content in zip(manifest.aliases, contents, strict=True)
            )
        )
        files = [
            ParsedFile(path=alias.path, alias=alias.alias, root=root_node)
            for alias, (root_node, _) in zip(manifest.aliases, results, strict=True)
        ]
        syntax = [diagnostic for _, found in results for diagnostic in found]
        log["counts"] = {"files": len(files), "diagnostics": len(syntax)}
    with log_phase_event("link", project) as log:
        graph, linked = link(files, catalog, config)
        log["counts"] = {
            "elements": len(graph.elements),
            "edges": len(graph.edges),
            "diagnostics": len(linked),
        }
    with log_phase_event("validate", project) as log:
        found = validate(graph, catalog, config)
        upstream = apply_config(
            [*manifest.diagnostics, *config.diagnostics, *syntax, *linked], config, catalog
        )
        diagnostics = sort_diagnostics([*upstream, *found])
        log["counts"] = {"diagnostics": len(diagnostics)}
    return Project(
        root=root,
        manifest=manifest,
        config=config,
        graph=graph,
        diagnostics=tuple(diagnostics),
    )


def load_project(root: Path | str, catalog: Catalog | None = None) -> Project:
    """Load, link and validate a project.

    Args:
        root: Project directory.
        catalog: Catalog, the embedded one by default.

    Returns:
        Project with every diagnostic, tailoring and overrides applied.
    """
    return run(load_project_async(root, catalog))
