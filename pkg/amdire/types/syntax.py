"""ARDL source, token and syntax tree types."""

from enum import StrEnum
from typing import NamedTuple

from amdire.types import FrozenModel


class SourceFile(FrozenModel):
    """ARDL source file."""

    path: str
    content: str
    artefact_kind_hint: str | None = None


class Span(FrozenModel):
    """Source range, 1-based, columns count Unicode code points."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    @property
    def sort_key(self) -> tuple[str, int, int]:
        """Ordering key (file, line, column)."""
        return self.file, self.start_line, self.start_col

    def covers_line(self, line: int) -> bool:
        """Return True if the span includes the line.

        Args:
            line: 1-based line number.

        Returns:
            True if covered.
        """
        return self.start_line <= line <= self.end_line

    def to(self, end: "Span") -> "Span":
        """Return the span from this span's start to another span's end.

        Args:
            end: Span whose end is used.

        Returns:
            Joined span.
        """
        return Span(
            file=self.file,
            start_line=self.start_line,
            start_col=self.start_col,
            end_line=end.end_line,
            end_col=end.end_col,
        )


class TokenKind(StrEnum):
    """Lexical token kinds."""

    KEYWORD = "keyword"
    IDENT = "identifier"
    STRING = "string"
    NUMBER = "number"
    LBRACE = "'{'"
    RBRACE = "'}'"
    LBRACKET = "'['"
    RBRACKET = "']'"
    COLON = "':'"
    COMMA = "','"
    DOT = "'.'"
    EOF = "end of file"


class Token(NamedTuple):
    """Lexical token.

    `value` holds the unescaped text of strings and the raw text otherwise.
    The end position is exclusive.
    """

    kind: TokenKind
    value: str
    line: int
    col: int
    end_line: int
    end_col: int


class NodeKind(StrEnum):
    """Syntax node kinds."""

    ARTEFACT_DECL = "ArtefactDecl"
    CONTENT_ITEM_BLOCK = "ContentItemBlock"
    ELEMENT_DECL = "ElementDecl"
    ATTRIBUTE_ASSIGN = "AttributeAssign"
    RELATION_CLAUSE = "RelationClause"
    STATUS_CLAUSE = "StatusClause"


class QualifiedName(FrozenModel):
    """Dotted reference as written in the source."""

    parts: tuple[str, ...]
    span: Span

    def __str__(self) -> str:
        """Dotted text."""
        return ".".join(self.parts)


type ScalarValue = str | bool | int | float | QualifiedName
type AttributeValue = ScalarValue | tuple[ScalarValue, ...]


class SyntaxNode(FrozenModel):
    """Node of the ARDL syntax tree.

    Field use per node kind:
        ArtefactDecl: keyword (artefact type keyword), title.
        ContentItemBlock: keyword (item keyword).
        ElementDecl: keyword (kind keyword), identifier, title.
        AttributeAssign: identifier (attribute name), value.
        RelationClause: relation_name (relation keyword), targets.
        StatusClause: value (status word).
    """

    node_kind: NodeKind
    span: Span
    head: Span | None = None
    children: tuple["SyntaxNode", ...] = ()
    keyword: str | None = None
    identifier: str | None = None
    title: str | None = None
    relation_name: str | None = None
    targets: tuple[QualifiedName, ...] = ()
    value: AttributeValue | None = None

    def structure(self) -> tuple[object, ...]:
        """Span-free structural form, for tree comparisons.

        Returns:
            Nested tuples.
        """
        value = self.value
        if isinstance(value, QualifiedName):
            value = ("ref", value.parts)
        elif isinstance(value, tuple):
            value = tuple(
                ("ref", item.parts) if isinstance(item, QualifiedName) else item
                for item in value
            )
        return (
            self.node_kind.value,
            self.keyword,
            self.identifier,
            self.title,
            self.relation_name,
            tuple(target.parts for target in self.targets),
            value,
            tuple(child.structure() for child in self.children),
        )


class ParsedFile(FrozenModel):
    """Parsed artefact file, the linker's input."""

    path: str
    alias: str
    root: SyntaxNode
