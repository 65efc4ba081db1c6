"""Pytest configuration and fixtures."""

from os import environ
from pathlib import Path
from shutil import copytree
from typing import TYPE_CHECKING

import pytest

if TYPE_CHECKING:
    from amdire.catalog import Catalog
    from amdire.project import Project
    from amdire.types.diagnostics import Diagnostic
    from amdire.types.graph import ModelGraph

SAMPLES_DIR = Path(__file__).parent / "samples"
ATM_DIR = SAMPLES_DIR / "atm"


def pytest_addoption(parser: pytest.Parser) -> None:
    """Add custom pytest command line options."""
    parser.addoption(
        "--expensive",
        action="store_true",
        default=False,
        help="Run compute/time expensive tests",
    )
    parser.addoption(
        "--info",
        action="store_true",
        default=False,
        help="Write 'info' level log events while testing.",
    )


def pytest_configure(config: pytest.Config) -> None:
    """Configure the toolchain environment before test modules are imported."""
    environ.update(
        {
            "AMDIRE_LOG_LEVEL": "info" if config.getoption("--info") else "critical",
            "AMDIRE_NO_COLOR": "1",
        }
    )


def pytest_collection_modifyitems(
    config: pytest.Config, items: list[pytest.Item]
) -> None:
    """Skip expensive tests at collection time unless explicitly requested."""
    if not config.getoption("--expensive"):
        skip_marker = pytest.mark.skip(
            reason="Need --expensive option to run this test"
        )
        for item in items:
            if item.get_closest_marker("expensive"):
                item.add_marker(skip_marker)


@pytest.fixture(scope="session")
def catalog() -> "Catalog":
    """Embedded catalog."""
    from amdire.catalog import load_catalog  # noqa: PLC0415

    return load_catalog()


@pytest.fixture(scope="session")
def atm_project() -> "Project":
    """The ATM sample project, loaded once."""
    from amdire.project import load_project  # noqa: PLC0415

    return load_project(ATM_DIR)


@pytest.fixture(scope="session")
def atm_graph(atm_project: "Project") -> "ModelGraph":
    """Linked graph of the ATM sample project."""
    return atm_project.graph


@pytest.fixture
def atm_dir(tmp_path: Path) -> Path:
    """A writable copy of the ATM sample project."""
    return copytree(ATM_DIR, tmp_path / "atm")


def write_project(
    root: Path,
    files: dict[str, str],
    *,
    manifest: str = "",
    name: str = "demo",
) -> Path:
    """Write a small project.

    Args:
        root: Project directory.
        files: ARDL content by alias, each written to `<alias>.ardl`.
        manifest: Additional manifest lines.
        name: Project name.

    Returns:
        The project directory.
    """
    root.mkdir(parents=True, exist_ok=True)
    lines = [f"name: {name}", *(f"alias {alias}: {alias}.ardl" for alias in files)]
    (root / "amdire-project.txt").write_text(
        "\n".join(lines) + "\n" + manifest, encoding="utf-8"
    )
    for alias, content in files.items():
        (root / f"{alias}.ardl").write_text(content, encoding="utf-8")
    return root


def link_sources(
    files: dict[str, str], name: str = "demo"
) -> tuple["ModelGraph", list["Diagnostic"]]:
    """Parse and link ARDL sources in memory.

    Args:
        files: ARDL content by alias, the file path is `<alias>.ardl`.
        name: Project name.

    Returns:
        Graph and syntax plus link diagnostics.
    """
    from amdire.ardl import parse  # noqa: PLC0415
    from amdire.linker import link  # noqa: PLC0415
    from amdire.types.syntax import ParsedFile, SourceFile  # noqa: PLC0415
    from amdire.types.tailoring import ProjectConfig  # noqa: PLC0415

    parsed = []
    diagnostics = []
    for alias, content in files.items():
        root, found = parse(SourceFile(path=f"{alias}.ardl", content=content))
        diagnostics.extend(found)
        parsed.append(ParsedFile(path=f"{alias}.ardl", alias=alias, root=root))
    graph, linked = link(parsed, config=ProjectConfig(name=name))
    return graph, [*diagnostics, *linked]


def codes(diagnostics: "list[Diagnostic] | tuple[Diagnostic, ...]") -> list[str]:
    """Return the codes of diagnostics, in order."""
    return [diagnostic.code for diagnostic in diagnostics]
