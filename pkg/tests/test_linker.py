"""Tests for the linker."""

import pytest

from amdire.ardl import parse
from amdire.exceptions import AmbiguousReferenceError, NotFoundError
from amdire.linker import SymbolTable, link, resolve
from amdire.types.catalog import RelationKind
from amdire.types.diagnostics import Severity
from amdire.types.graph import Reference, Status
from amdire.types.syntax import ParsedFile, SourceFile
from amdire.types.tailoring import ProjectConfig
from tests.conftest import codes, link_sources

CONTEXT = """\
context-specification "Context" {
  stakeholder-model {
    user-group Customers "Bank customers" { size: 1000 }
  }
  domain-model {
    external-system Bank { }
  }
}
"""


def _requirements(usage: str) -> str:
    """Wrap usage model content in a requirements file."""
    return f'requirements-specification "Requirements" {{\n  usage-model {{\n{usage}\n  }}\n}}\n'


class TestSymbolTable:
    """Name declaration and lookup."""

    @pytest.fixture
    def table(self) -> SymbolTable:
        """A table with nested names."""
        table = SymbolTable("atm")
        table.declare("requirements.Withdraw.Pay", "requirements.Withdraw.Pay")
        table.declare("requirements.Refund.Pay", "requirements.Refund.Pay")
        table.declare("context.Customers", "context.Customers")
        return table

    def test_exact(self, table: SymbolTable) -> None:
        """Fully qualified names resolve directly."""
        assert table.lookup("requirements.Refund.Pay") == "requirements.Refund.Pay"

    def test_project_prefix(self, table: SymbolTable) -> None:
        """Names may be prefixed by the project name."""
        assert table.lookup("atm.context.Customers") == "context.Customers"

    def test_suffix(self, table: SymbolTable) -> None:
        """Unique suffixes resolve."""
        assert table.lookup("Customers") == "context.Customers"
        assert table.lookup("Withdraw.Pay") == "requirements.Withdraw.Pay"

    def test_ambiguous(self, table: SymbolTable) -> None:
        """Suffixes shared by several names are ambiguous."""
        with pytest.raises(AmbiguousReferenceError) as error:
            table.lookup("Pay")
        assert error.value.candidates == (
            "requirements.Refund.Pay",
            "requirements.Withdraw.Pay",
        )

    def test_not_found(self, table: SymbolTable) -> None:
        """Partial segments do not match."""
        with pytest.raises(NotFoundError):
            table.lookup("ustomers")

    def test_duplicate(self, table: SymbolTable) -> None:
        """Names are declared once."""
        assert not table.declare("context.Customers", "context.Customers#2")
        assert table.lookup("Customers") == "context.Customers"


class TestResolution:
    """Graph construction and reference resolution."""

    def test_cross_file_realisation(self) -> None:
        """Partial names resolve across files."""
        graph, diagnostics = link_sources(
            {
                "context": CONTEXT,
                "requirements": _requirements("    actor Customer { realises Customers }"),
            }
        )
        assert diagnostics == []
        assert graph.outgoing("requirements.Customer", RelationKind.REALISES)[0].target == (
            "context.Customers"
        )
        assert graph.incoming("context.Customers")[0].source == "requirements.Customer"

    def test_elements(self) -> None:
        """Elements carry kind, home item, artefact type and attributes."""
        graph, _ = link_sources({"context": CONTEXT})
        customers = graph.elements["context.Customers"]
        assert customers.kind == "UserGroup"
        assert customers.title == "Bank customers"
        assert customers.home_item == "StakeholderModel"
        assert customers.artefact_type == "ContextSpecification"
        assert customers.attributes == {"size": 1000}
        assert customers.status is Status.DRAFT
        assert graph.partitions["ContextSpecification"] == {
            "context.Customers",
            "context.Bank",
        }
        assert set(graph.artefacts["ContextSpecification"].item_spans) == {
            "StakeholderModel",
            "DomainModel",
        }

    def test_nesting(self) -> None:
        """Nested elements are scoped by their parent's name."""
        graph, _ = link_sources(
            {
                "requirements": _requirements(
                    "    use-case Withdraw {\n"
                    "      functional-scenario Standard { }\n"
                    "    }"
                )
            }
        )
        assert "requirements.Withdraw.Standard" in graph.elements
        assert graph.parents["requirements.Withdraw.Standard"] == "requirements.Withdraw"
        assert graph.children["requirements.Withdraw"] == ("requirements.Withdraw.Standard",)

    def test_project_qualified(self) -> None:
        """References may start with the project name."""
        graph, diagnostics = link_sources(
            {
                "context": CONTEXT,
                "requirements": _requirements("    actor Host { realises demo.context.Bank }"),
            }
        )
        assert diagnostics == []
        assert graph.outgoing("requirements.Host")[0].target == "context.Bank"

    def test_reference_attributes(self) -> None:
        """Reference attributes prefer sibling elements."""
        graph, diagnostics = link_sources(
            {
                "system": 'system-specification "S" {\n'
                "  behaviour-model {\n"
                "    state-machine Machine {\n"
                "      state Idle { }\n"
                "      state Busy { }\n"
                "      state-transition Go { source: Idle target: Busy }\n"
                "    }\n"
                "  }\n"
                "}\n"
            }
        )
        assert diagnostics == []
        attributes = graph.elements["system.Machine.Go"].attributes
        assert attributes["source"] == Reference(path="Idle", target="system.Machine.Idle")
        assert attributes["target"] == Reference(path="Busy", target="system.Machine.Busy")

    def test_unresolved_reference_attribute(self) -> None:
        """Unresolvable reference attributes stay unresolved without a link error."""
        graph, diagnostics = link_sources(
            {
                "system": 'system-specification "S" { behaviour-model {\n'
                "  state-transition Go { source: Nowhere }\n"
                "} }\n"
            }
        )
        assert diagnostics == []
        assert graph.elements["system.Go"].attributes["source"] == Reference(path="Nowhere")

    def test_resolve(self) -> None:
        """Names resolve in a linked graph."""
        graph, _ = link_sources({"context": CONTEXT})
        assert resolve(graph, "Bank") == "context.Bank"

    def test_file_order(self) -> None:
        """The result does not depend on the order of the files."""
        files = []
        for alias, content in (
            ("context", CONTEXT),
            ("requirements", _requirements("    actor Customer { realises Customers, Nobody }")),
        ):
            root, _ = parse(SourceFile(path=f"{alias}.ardl", content=content))
            files.append(ParsedFile(path=f"{alias}.ardl", alias=alias, root=root))
        config = ProjectConfig(name="demo")
        graph, diagnostics = link(files, config=config)
        reversed_graph, reversed_diagnostics = link(files[::-1], config=config)
        assert graph.structure() == reversed_graph.structure()
        assert diagnostics == reversed_diagnostics


class TestDiagnostics:
    """Link-time diagnostics."""

    def test_unresolved(self) -> None:
        """Unknown relation targets."""
        graph, diagnostics = link_sources(
            {"requirements": _requirements("    actor Customer { realises Nobody }")}
        )
        assert codes(diagnostics) == ["AMD001"]
        assert diagnostics[0].message == "Unresolved reference 'Nobody'"
        assert diagnostics[0].item == "UsageModel"
        assert diagnostics[0].span.start_line == 3
        assert graph.edges == ()

    def test_duplicate_name(self) -> None:
        """Duplicates stay addressable under a suffixed id."""
        graph, diagnostics = link_sources(
            {
                "context": 'context-specification "C" { stakeholder-model {\n'
                "  user-group Customers { }\n"
                "  user-group Customers { }\n"
                "} }\n"
            }
        )
        assert codes(diagnostics) == ["AMD002"]
        assert diagnostics[0].span.start_line == 3
        assert diagnostics[0].related[0].span.start_line == 2
        assert set(graph.elements) == {"context.Customers", "context.Customers#2"}

    def test_ambiguous(self) -> None:
        """Ambiguous partial names list their candidates."""
        graph, diagnostics = link_sources(
            {
                "requirements": _requirements(
                    "    use-case A { functional-scenario Pay { } }\n"
                    "    use-case B { functional-scenario Pay { } }\n"
                    "    event Tap { triggers Pay }\n"
                    "    event Tip { triggers B.Pay }"
                )
            }
        )
        assert codes(diagnostics) == ["AMD003"]
        assert diagnostics[0].message == (
            "Ambiguous reference 'Pay', candidates: requirements.A.Pay, requirements.B.Pay"
        )
        assert len(diagnostics[0].related) == 2
        assert [edge.target for edge in graph.edges] == ["requirements.B.Pay"]

    def test_misplaced(self) -> None:
        """Elements outside their home item are skipped with their children."""
        graph, diagnostics = link_sources(
            {
                "requirements": _requirements(
                    "    feature Cash { }\n    use-case Withdraw { }"
                )
            }
        )
        assert codes(diagnostics) == ["AMD004"]
        assert diagnostics[0].message == (
            "Feature 'Cash' belongs in System Vision (Requirements Specification), "
            "not in Usage Model"
        )
        assert set(graph.elements) == {"requirements.Withdraw"}

    def test_foreign_item(self) -> None:
        """Content items of another artefact type."""
        graph, diagnostics = link_sources(
            {"context": 'context-specification "C" { usage-model { actor X { } } }'}
        )
        assert codes(diagnostics) == ["AMD005"]
        assert graph.elements == {}

    def test_duplicate_relation(self) -> None:
        """Repeated relations keep one edge."""
        graph, diagnostics = link_sources(
            {
                "context": CONTEXT,
                "requirements": _requirements(
                    "    actor Customer {\n"
                    "      realises Customers\n"
                    "      realises context.Customers\n"
                    "    }"
                ),
            }
        )
        assert codes(diagnostics) == ["AMD006"]
        assert diagnostics[0].severity is Severity.WARNING
        assert len(graph.edges) == 1

    def test_duplicate_artefact(self) -> None:
        """Only the first file of an artefact type is linked."""
        graph, diagnostics = link_sources(
            {
                "a": CONTEXT,
                "b": 'context-specification "Again" { glossary { term ATM { } } }',
            }
        )
        assert codes(diagnostics) == ["AMD007"]
        assert diagnostics[0].span.file == "b.ardl"
        assert "b.ATM" not in graph.elements
        assert graph.artefacts["ContextSpecification"].file == "a.ardl"

    def test_duplicate_assignment(self) -> None:
        """The last assignment wins."""
        graph, diagnostics = link_sources(
            {
                "context": 'context-specification "C" { stakeholder-model {\n'
                "  user-group Customers { status: draft status: agreed size: 1 size: 2 }\n"
                "} }\n"
            }
        )
        assert codes(diagnostics) == ["AMD008", "AMD008"]
        customers = graph.elements["context.Customers"]
        assert customers.status is Status.AGREED
        assert customers.attributes["size"] == 2

    def test_missing_header(self) -> None:
        """Empty files have no artefact."""
        graph, diagnostics = link_sources({"context": ""})
        assert codes(diagnostics) == ["AMD009"]
        assert graph.artefacts == {}

    def test_unknown_attribute(self) -> None:
        """Attributes not declared by the kind."""
        _, diagnostics = link_sources(
            {"requirements": _requirements('    actor Customer { colour: "red" }')}
        )
        assert codes(diagnostics) == ["AMD011"]
        assert diagnostics[0].message.endswith("expected one of: description")

    @pytest.mark.parametrize("value", ['"high"', "true", "[1, 2]", "Other"])
    def test_type_mismatch(self, value: str) -> None:
        """Values of the wrong type."""
        _, diagnostics = link_sources(
            {
                "requirements": 'requirements-specification "R" { system-vision {\n'
                f"  feature Cash {{ priority: {value} }}\n"
                "} }\n"
            }
        )
        assert codes(diagnostics) == ["AMD012"]
        assert diagnostics[0].message == (
            "Attribute 'priority' of Feature 'Cash' expects a number value"
        )

    def test_syntax_errors_do_not_block_linking(self) -> None:
        """Elements parsed around a syntax error are linked."""
        graph, diagnostics = link_sources(
            {
                "context": 'context-specification "C" { stakeholder-model {\n'
                "  user-group A { size 3 }\n"
                "  user-group B { }\n"
                "} }\n"
            }
        )
        assert codes(diagnostics) == ["ARD010"]
        assert set(graph.elements) == {"context.A", "context.B"}
