"""ARDL recursive descent parser with panic-mode error recovery.

Grammar:
    file := artefact-keyword string "{" item-block* "}"
    item-block := item-keyword "{" element* "}"
    element := kind-keyword name string? "{" member* "}"
    member := attribute | status | relation | element
    attribute := name ":" value
    status := "status" ":" ("draft" | "defined" | "agreed")
    relation := relation-keyword qualified-name ("," qualified-name)*
    value := string | number | "true" | "false" | qualified-name
           | "[" (value ("," value)*)? "]"

On a syntax error the parser reports ARD010 with the expected tokens, then
skips to the next member of the enclosing block, to its closing brace, or to
the next content item keyword, which unwinds to the file level.
"""

from collections.abc import Callable
from typing import Literal

from amdire.ardl.lexer import tokenize
from amdire.catalog import Catalog, load_catalog
from amdire.codes import UNEXPECTED_TOKEN
from amdire.types.diagnostics import Diagnostic
from amdire.types.graph import Status
from amdire.types.syntax import (
    AttributeValue,
    NodeKind,
    QualifiedName,
    ScalarValue,
    SourceFile,
    Span,
    SyntaxNode,
    Token,
    TokenKind,
)

_NAME_KINDS = frozenset({TokenKind.IDENT, TokenKind.KEYWORD})
_BOOLEANS = {"true": True, "false": False}
_STATUSES = tuple(status.value for status in Status)

#: Recovery outcome
_Sync = Literal["member", "close", "unwind", "eof"]


class _Parser:
    """Parser state over one token list."""

    def __init__(self, source: SourceFile, tokens: list[Token], catalog: Catalog) -> None:
        """Initialize the parser.

        Args:
            source: Source file.
            tokens: Tokens of the file.
            catalog: Catalog providing keyword classes.
        """
        self._file = source.path
        last = tokens[-1] if tokens else None
        eof_line, eof_col = (last.end_line, last.end_col) if last else (1, 1)
        self._tokens = [*tokens, Token(TokenKind.EOF, "", eof_line, eof_col, eof_line, eof_col)]
        self._pos = 0
        self._artefact_keywords = {artefact.keyword for artefact in catalog.artefact_types}
        self._item_keywords = {item.keyword for item in catalog.content_items}
        self._concept_keywords = {concept.keyword for concept in catalog.concepts}
        self._relation_keywords = set(catalog.relation_keywords)
        self.diagnostics: list[Diagnostic] = []
        self._unwinding = False
        self._eof_reported = False

    @property
    def _tok(self) -> Token:
        return self._tokens[self._pos]

    def _peek(self, offset: int = 1) -> Token:
        return self._tokens[min(self._pos + offset, len(self._tokens) - 1)]

    def _advance(self) -> Token:
        token = self._tokens[self._pos]
        if token.kind is not TokenKind.EOF:
            self._pos += 1
        return token

    def _span(self, start: Token, end: Token) -> Span:
        return Span(
            file=self._file,
            start_line=start.line,
            start_col=start.col,
            end_line=end.end_line,
            end_col=end.end_col,
        )

    def _previous(self) -> Token:
        return self._tokens[max(self._pos - 1, 0)]

    def _error(self, expected: str) -> None:
        """Report an unexpected token.

        Args:
            expected: Human-readable expected token set.
        """
        token = self._tok
        if token.kind is TokenKind.EOF:
            if self._eof_reported:
                return
            self._eof_reported = True
            found = "end of file"
        elif token.kind is TokenKind.STRING:
            found = "string"
        else:
            found = f"'{token.value}'"
        self.diagnostics.append(
            UNEXPECTED_TOKEN.diagnostic(
                f"Expected {expected}, found {found}", self._span(token, token)
            )
        )

    def _is_item_keyword(self, token: Token) -> bool:
        return token.kind is TokenKind.KEYWORD and token.value in self._item_keywords

    def _skip_balanced(self) -> None:
        """Skip a brace-delimited group starting at the current `{`."""
        depth = 0
        while self._tok.kind is not TokenKind.EOF:
            kind = self._advance().kind
            if kind is TokenKind.LBRACE:
                depth += 1
            elif kind is TokenKind.RBRACE:
                depth -= 1
                if depth == 0:
                    return

    def _recover(self, can_start: Callable[[Token], bool], *, file_level: bool = False) -> _Sync:
        """Skip tokens up to a synchronisation point.

        Args:
            can_start: Predicate of tokens starting a member of the current block.
            file_level: True when recovering between content item blocks.

        Returns:
            Where the parser stopped.
        """
        while True:
            token = self._tok
            if token.kind is TokenKind.EOF:
                self._eof_reported = True
                return "eof"
            if token.kind is TokenKind.RBRACE:
                return "close"
            if not file_level and self._is_item_keyword(token):
                self._unwinding = True
                return "unwind"
            if can_start(token):
                return "member"
            if token.kind is TokenKind.LBRACE:
                self._skip_balanced()
            else:
                self._advance()

    def _members(
        self,
        parse_member: Callable[[], SyntaxNode | None],
        can_start: Callable[[Token], bool],
        expected: str,
        *,
        file_level: bool = False,
    ) -> list[SyntaxNode]:
        """Parse block members up to the closing brace.

        Args:
            parse_member: Member parser, returns None on a dropped member.
            can_start: Predicate of tokens starting a member.
            expected: Expected token set for error messages.
            file_level: True when parsing content item blocks.

        Returns:
            Parsed members.
        """
        nodes: list[SyntaxNode] = []
        while True:
            token = self._tok
            if token.kind in {TokenKind.RBRACE, TokenKind.EOF}:
                return nodes
            if not file_level and self._is_item_keyword(token):
                return nodes
            if can_start(token):
                node = parse_member()
                if node is not None:
                    nodes.append(node)
                continue
            self._error(expected)
            self._recover(can_start, file_level=file_level)

    def _close(self) -> Token:
        """Consume the closing brace of a block.

        Returns:
            The last token of the block.
        """
        token = self._tok
        if token.kind is TokenKind.RBRACE:
            return self._advance()
        if not self._unwinding:
            self._error("'}'")
            if token.kind is not TokenKind.EOF:
                self._unwinding = True
        return self._previous()

    def _can_start_block(self, token: Token) -> bool:
        return self._is_item_keyword(token)

    def _can_start_member(self, token: Token) -> bool:
        if token.kind in _NAME_KINDS and self._peek().kind is TokenKind.COLON:
            return True
        if token.kind is not TokenKind.KEYWORD:
            return False
        return token.value in self._relation_keywords or token.value in self._concept_keywords

    def parse_file(self) -> SyntaxNode:
        """Parse a whole file.

        Returns:
            ArtefactDecl root node.
        """
        first = self._tok
        if first.kind is TokenKind.EOF:
            return SyntaxNode(
                node_kind=NodeKind.ARTEFACT_DECL, span=self._span(first, first)
            )
        keyword = title = None
        head = None
        if first.kind is TokenKind.KEYWORD and first.value in self._artefact_keywords:
            keyword = self._advance().value
            if self._tok.kind is TokenKind.STRING:
                title = self._advance().value
            else:
                self._error("artefact title string")
            head = self._span(first, self._previous())
            if self._tok.kind is TokenKind.LBRACE:
                self._advance()
            else:
                self._error("'{'")
        else:
            self._error("'context-specification', 'requirements-specification' or 'system-specification'")
            self._recover(self._can_start_block, file_level=True)
        children = self._members(
            self._parse_block,
            self._can_start_block,
            "content item keyword or '}'",
            file_level=True,
        )
        last = self._close() if keyword else self._previous()
        if self._tok.kind is not TokenKind.EOF:
            self._error("end of file")
        return SyntaxNode(
            node_kind=NodeKind.ARTEFACT_DECL,
            span=self._span(first, last),
            head=head,
            children=tuple(children),
            keyword=keyword,
            title=title,
        )

    def _parse_block(self) -> SyntaxNode | None:
        """Parse a content item block.

        Returns:
            ContentItemBlock node, or None if dropped.
        """
        self._unwinding = False
        start = self._advance()
        if self._tok.kind is not TokenKind.LBRACE:
            self._error("'{'")
            self._recover(self._can_start_block, file_level=True)
            return None
        self._advance()
        children = self._members(
            self._parse_member,
            self._can_start_member,
            "element keyword, relation, attribute or '}'",
        )
        end = self._close()
        return SyntaxNode(
            node_kind=NodeKind.CONTENT_ITEM_BLOCK,
            span=self._span(start, end),
            head=self._span(start, start),
            children=tuple(children),
            keyword=start.value,
        )

    def _parse_member(self) -> SyntaxNode | None:
        """Parse an element body member.

        Returns:
            Member node, or None if dropped.
        """
        token = self._tok
        if self._peek().kind is TokenKind.COLON:
            if token.value == "status":
                return self._parse_status()
            return self._parse_attribute()
        if token.value in self._relation_keywords:
            return self._parse_relation()
        return self._parse_element()

    def _drop(self, expected: str) -> None:
        """Report an error inside a member and skip the member.

        Args:
            expected: Expected token set.
        """
        self._error(expected)
        self._recover(self._can_start_member)

    def _parse_element(self) -> SyntaxNode | None:
        """Parse an element declaration.

        Returns:
            ElementDecl node, or None if dropped.
        """
        start = self._advance()
        if self._tok.kind not in _NAME_KINDS:
            self._drop("element name")
            return None
        identifier = self._advance().value
        title = None
        if self._tok.kind is TokenKind.STRING:
            title = self._advance().value
        head = self._span(start, self._previous())
        if self._tok.kind is not TokenKind.LBRACE:
            self._drop("element title or '{'")
            return None
        self._advance()
        children = self._members(
            self._parse_member,
            self._can_start_member,
            "element keyword, relation, attribute, status or '}'",
        )
        end = self._close()
        return SyntaxNode(
            node_kind=NodeKind.ELEMENT_DECL,
            span=self._span(start, end),
            head=head,
            children=tuple(children),
            keyword=start.value,
            identifier=identifier,
            title=title,
        )

    def _parse_status(self) -> SyntaxNode | None:
        """Parse a status clause.

        Returns:
            StatusClause node, or None if dropped.
        """
        start = self._advance()
        self._advance()
        token = self._tok
        if token.kind is not TokenKind.IDENT or token.value not in _STATUSES:
            self._drop("'draft', 'defined' or 'agreed'")
            return None
        self._advance()
        return SyntaxNode(
            node_kind=NodeKind.STATUS_CLAUSE,
            span=self._span(start, token),
            value=token.value,
        )

    def _parse_attribute(self) -> SyntaxNode | None:
        """Parse an attribute assignment.

        Returns:
            AttributeAssign node, or None if dropped.
        """
        start = self._advance()
        self._advance()
        value = self._parse_value(allow_list=True)
        if value is None:
            return None
        return SyntaxNode(
            node_kind=NodeKind.ATTRIBUTE_ASSIGN,
            span=self._span(start, self._previous()),
            identifier=start.value,
            value=value,
        )

    def _parse_value(self, *, allow_list: bool) -> AttributeValue | None:
        """Parse an attribute value.

        Args:
            allow_list: Accept a bracketed list.

        Returns:
            Value, or None if dropped.
        """
        token = self._tok
        if token.kind is TokenKind.STRING:
            self._advance()
            return token.value
        if token.kind is TokenKind.NUMBER:
            self._advance()
            return float(token.value) if "." in token.value else int(token.value)
        if token.kind is TokenKind.IDENT and token.value in _BOOLEANS:
            self._advance()
            return _BOOLEANS[token.value]
        if token.kind in _NAME_KINDS:
            return self._parse_qualified_name()
        if allow_list and token.kind is TokenKind.LBRACKET:
            return self._parse_list()
        self._drop("value")
        return None

    def _parse_list(self) -> tuple[ScalarValue, ...] | None:
        """Parse a bracketed value list.

        Returns:
            Values, or None if dropped.
        """
        self._advance()
        values: list[ScalarValue] = []
        if self._tok.kind is TokenKind.RBRACKET:
            self._advance()
            return ()
        while True:
            value = self._parse_value(allow_list=False)
            if value is None:
                return None
            values.append(value)  # type: ignore[arg-type]
            if self._tok.kind is TokenKind.COMMA:
                self._advance()
                continue
            if self._tok.kind is TokenKind.RBRACKET:
                self._advance()
                return tuple(values)
            self._drop("',' or ']'")
            return None

    def _parse_qualified_name(self) -> QualifiedName | None:
        """Parse a dotted name.

        Returns:
            Qualified name, or None if dropped.
        """
        start = self._tok
        if start.kind not in _NAME_KINDS:
            self._drop("qualified name")
            return None
        parts = [self._advance().value]
        while self._tok.kind is TokenKind.DOT:
            self._advance()
            if self._tok.kind not in _NAME_KINDS:
                self._drop("name after '.'")
                return None
            parts.append(self._advance().value)
        return QualifiedName(parts=tuple(parts), span=self._span(start, self._previous()))

    def _parse_relation(self) -> SyntaxNode | None:
        """Parse a relation clause.

        Returns:
            RelationClause node, or None if dropped.
        """
        start = self._advance()
        targets: list[QualifiedName] = []
        while True:
            target = self._parse_qualified_name()
            if target is None:
                return None
            targets.append(target)
            if self._tok.kind is not TokenKind.COMMA:
                break
            self._advance()
        return SyntaxNode(
            node_kind=NodeKind.RELATION_CLAUSE,
            span=self._span(start, self._previous()),
            relation_name=start.value,
            targets=tuple(targets),
        )


def parse(
    source: SourceFile, catalog: Catalog | None = None
) -> tuple[SyntaxNode, list[Diagnostic]]:
    """Parse an ARDL file.

    Parsing never fails: a root node is always returned, syntax errors are
    reported as diagnostics alongside lexical ones.

    Args:
        source: Source file.
        catalog: Catalog, the embedded one by default.

    Returns:
        Root ArtefactDecl node and diagnostics.
    """
    catalog = catalog or load_catalog()
    tokens, diagnostics = tokenize(source, catalog.keywords)
    parser = _Parser(source, tokens, catalog)
    root = parser.parse_file()
    return root, [*diagnostics, *parser.diagnostics]
