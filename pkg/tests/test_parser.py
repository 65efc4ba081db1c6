"""Tests for the ARDL parser."""

from amdire.ardl import parse
from amdire.types.diagnostics import Diagnostic
from amdire.types.syntax import NodeKind, QualifiedName, SourceFile, SyntaxNode

SYSTEM_FUNCTIONS = """\
system-specification "ATM system" {
  function-model {
    system-function Dispense "Dispense notes" {
      status: defined
      internal: false
      description: "Counts and releases notes"
      realises requirements.CashDispensing, TakeCash
    }
  }
  behaviour-model {
    state-machine Machine {
      state Idle { initial: true }
      state-transition Start {
        source: Machine.Idle
        guard: "card inserted"
      }
    }
  }
}
"""


def _parse(content: str) -> tuple[SyntaxNode, list[Diagnostic]]:
    """Parse a string as `test.ardl`."""
    return parse(SourceFile(path="test.ardl", content=content))


def _elements(node: SyntaxNode) -> list[str]:
    """Return identifiers of every element below a node, depth first."""
    found = []
    for child in node.children:
        if child.node_kind is NodeKind.ELEMENT_DECL:
            found.append(child.identifier)
        found.extend(_elements(child))
    return found


class TestValidFiles:
    """Trees of well-formed files."""

    def test_tree(self) -> None:
        """Artefact, blocks and elements."""
        root, diagnostics = _parse(SYSTEM_FUNCTIONS)
        assert diagnostics == []
        assert root.node_kind is NodeKind.ARTEFACT_DECL
        assert (root.keyword, root.title) == ("system-specification", "ATM system")
        assert [block.keyword for block in root.children] == [
            "function-model",
            "behaviour-model",
        ]
        assert _elements(root) == ["Dispense", "Machine", "Idle", "Start"]

    def test_members(self) -> None:
        """Status, attributes and relation clauses."""
        root, _ = _parse(SYSTEM_FUNCTIONS)
        function = root.children[0].children[0]
        assert (function.keyword, function.identifier, function.title) == (
            "system-function",
            "Dispense",
            "Dispense notes",
        )
        status, internal, description, relation = function.children
        assert (status.node_kind, status.value) == (NodeKind.STATUS_CLAUSE, "defined")
        assert (internal.identifier, internal.value) == ("internal", False)
        assert description.value == "Counts and releases notes"
        assert relation.node_kind is NodeKind.RELATION_CLAUSE
        assert relation.relation_name == "realises"
        assert [target.parts for target in relation.targets] == [
            ("requirements", "CashDispensing"),
            ("TakeCash",),
        ]

    def test_reference_value(self) -> None:
        """Dotted attribute values are qualified names."""
        root, _ = _parse(SYSTEM_FUNCTIONS)
        transition = root.children[1].children[0].children[1]
        source = transition.children[0]
        assert isinstance(source.value, QualifiedName)
        assert str(source.value) == "Machine.Idle"

    def test_list_values(self) -> None:
        """Bracketed lists of scalars."""
        root, diagnostics = _parse(
            'context-specification "C" {\n'
            "  glossary {\n"
            '    term ATM { synonyms: ["cash machine", Terminal, 3, true] abbreviation: "" }\n'
            "  }\n"
            "}\n"
        )
        term = root.children[0].children[0]
        assert term.children[0].value[0] == "cash machine"
        assert isinstance(term.children[0].value[1], QualifiedName)
        assert term.children[0].value[2:] == (3, True)
        assert term.children[1].value == ""
        assert diagnostics == []

    def test_empty_list(self) -> None:
        """An empty list is an empty tuple."""
        root, diagnostics = _parse(
            'context-specification "C" { glossary { term ATM { synonyms: [] } } }'
        )
        assert diagnostics == []
        assert root.children[0].children[0].children[0].value == ()

    def test_empty_file(self) -> None:
        """An empty file gives an empty root without syntax errors."""
        root, diagnostics = _parse("// nothing yet\n")
        assert diagnostics == []
        assert root.keyword is None
        assert root.children == ()

    def test_spans(self) -> None:
        """Element spans cover the whole declaration, heads the name and title."""
        root, _ = _parse(SYSTEM_FUNCTIONS)
        function = root.children[0].children[0]
        assert (function.span.start_line, function.span.end_line) == (3, 8)
        assert function.head is not None
        assert (function.head.start_line, function.head.end_line) == (3, 3)


class TestRecovery:
    """Syntax errors and panic-mode recovery."""

    def test_missing_header(self) -> None:
        """Files must start with an artefact keyword."""
        root, diagnostics = _parse("glossary { term ATM { } }")
        assert [diagnostic.code for diagnostic in diagnostics] == ["ARD010"]
        assert diagnostics[0].message.startswith(
            "Expected 'context-specification', 'requirements-specification' or "
            "'system-specification'"
        )
        assert root.keyword is None

    def test_bad_member_skipped(self) -> None:
        """A malformed member is skipped, the following elements still parse."""
        root, diagnostics = _parse(
            'requirements-specification "R" {\n'
            "  system-vision {\n"
            '    feature A "a" {\n'
            "      priority 1\n"
            "    }\n"
            '    feature B "b" { }\n'
            "  }\n"
            "}\n"
        )
        assert len(diagnostics) == 1
        diagnostic = diagnostics[0]
        assert diagnostic.code == "ARD010"
        assert diagnostic.message == (
            "Expected element keyword, relation, attribute, status or '}', "
            "found 'priority'"
        )
        assert (diagnostic.span.start_line, diagnostic.span.start_col) == (4, 7)
        assert _elements(root) == ["A", "B"]

    def test_unclosed_at_eof(self) -> None:
        """Missing closing braces at the end of a file are reported once."""
        root, diagnostics = _parse(
            'requirements-specification "R" {\n  system-vision {\n    feature A {\n'
        )
        assert [diagnostic.message for diagnostic in diagnostics] == [
            "Expected '}', found end of file"
        ]
        assert _elements(root) == ["A"]

    def test_unwind_to_next_item(self) -> None:
        """An unclosed element ends at the next content item keyword."""
        root, diagnostics = _parse(
            'requirements-specification "R" {\n'
            "  system-vision {\n"
            "    feature A {\n"
            "      priority: 1\n"
            "  usage-model {\n"
            "    actor X { }\n"
            "  }\n"
            "}\n"
        )
        assert [diagnostic.message for diagnostic in diagnostics] == [
            "Expected '}', found 'usage-model'"
        ]
        assert [block.keyword for block in root.children] == [
            "system-vision",
            "usage-model",
        ]
        assert _elements(root) == ["A", "X"]

    def test_bad_status(self) -> None:
        """Unknown status words drop the clause."""
        root, diagnostics = _parse(
            'requirements-specification "R" { system-vision { feature A { status: done } } }'
        )
        assert [diagnostic.message for diagnostic in diagnostics] == [
            "Expected 'draft', 'defined' or 'agreed', found 'done'"
        ]
        assert root.children[0].children[0].children == ()

    def test_trailing_tokens(self) -> None:
        """Tokens after the artefact's closing brace are reported."""
        _, diagnostics = _parse('system-specification "S" { }\nextra')
        assert [diagnostic.message for diagnostic in diagnostics] == [
            "Expected end of file, found 'extra'"
        ]

    def test_lexical_errors_first(self) -> None:
        """Lexical diagnostics are returned with the syntax ones."""
        _, diagnostics = _parse('system-specification "S" { § }')
        assert [diagnostic.code for diagnostic in diagnostics] == ["ARD002"]
