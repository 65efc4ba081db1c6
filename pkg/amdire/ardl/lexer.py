"""ARDL lexer."""

from collections.abc import Iterable
from re import compile as compile_regex

from amdire.catalog import load_catalog
from amdire.codes import ILLEGAL_CHARACTER, UNTERMINATED_STRING
from amdire.types.diagnostics import Diagnostic
from amdire.types.syntax import SourceFile, Span, Token, TokenKind

_TOKEN_SPECIFICATION = (
    ("NEWLINE", r"\r?\n"),
    ("SKIP", r"[^\S\n]+"),
    ("COMMENT", r"//[^\n]*"),
    ("STRING", r'"(?:[^"\\\n]|\\.)*"'),
    ("UNTERMINATED", r'"[^\n]*'),
    ("NUMBER", r"-?\d+(?:\.\d+)?"),
    ("IDENT", r"[A-Za-z_][A-Za-z0-9_-]*"),
    ("LBRACE", r"\{"),
    ("RBRACE", r"\}"),
    ("LBRACKET", r"\["),
    ("RBRACKET", r"\]"),
    ("COLON", r":"),
    ("COMMA", r","),
    ("DOT", r"\."),
    ("ILLEGAL", r"""[^\s"A-Za-z0-9_{}\[\]:,./-]+|[/-]"""),
)
_TOKEN_REGEX = compile_regex(
    "|".join(f"(?P<{name}>{pattern})" for name, pattern in _TOKEN_SPECIFICATION)
)
_ESCAPE_REGEX = compile_regex(r"\\(.)")
_PUNCTUATION = {
    "LBRACE": TokenKind.LBRACE,
    "RBRACE": TokenKind.RBRACE,
    "LBRACKET": TokenKind.LBRACKET,
    "RBRACKET": TokenKind.RBRACKET,
    "COLON": TokenKind.COLON,
    "COMMA": TokenKind.COMMA,
    "DOT": TokenKind.DOT,
}


def _unescape(text: str) -> str:
    r"""Resolve `\"` and `\\` escapes, other backslashes are kept as written.

    Args:
        text: String body without quotes.

    Returns:
        Unescaped text.
    """
    return _ESCAPE_REGEX.sub(
        lambda match: match[1] if match[1] in {'"', "\\"} else match[0], text
    )


def escape(text: str) -> str:
    """Escape a string for an ARDL string literal body.

    Args:
        text: Raw text.

    Returns:
        Escaped text.
    """
    return text.replace("\\", "\\\\").replace('"', '\\"')


def tokenize(
    source: SourceFile, keywords: Iterable[str] | None = None
) -> tuple[list[Token], list[Diagnostic]]:
    """Split ARDL source into tokens.

    Comments and whitespace are discarded. Lexical errors are reported as
    diagnostics and never abort: an unterminated string still yields a string
    token up to the end of its line, a run of illegal characters is skipped.

    Args:
        source: Source file.
        keywords: Reserved words, the catalog keywords by default.

    Returns:
        Tokens and lexical diagnostics.
    """
    reserved = frozenset(keywords) if keywords is not None else load_catalog().keywords
    tokens: list[Token] = []
    diagnostics: list[Diagnostic] = []
    line = 1
    line_start = 0
    for match in _TOKEN_REGEX.finditer(source.content):
        group = match.lastgroup
        text = match.group()
        col = match.start() - line_start + 1
        if group == "NEWLINE":
            line += 1
            line_start = match.end()
            continue
        if group in {"SKIP", "COMMENT"}:
            continue
        end_col = col + len(text)
        if group == "ILLEGAL":
            diagnostics.append(
                ILLEGAL_CHARACTER.diagnostic(
                    f"Illegal character {text[0]!r}",
                    Span(file=source.path, start_line=line, start_col=col, end_line=line, end_col=end_col),
                )
            )
            continue
        if group == "UNTERMINATED":
            diagnostics.append(
                UNTERMINATED_STRING.diagnostic(
                    "Unterminated string literal",
                    Span(file=source.path, start_line=line, start_col=col, end_line=line, end_col=col + 1),
                )
            )
            value = _unescape(text[1:].rstrip("\r"))
            kind = TokenKind.STRING
        elif group == "STRING":
            value = _unescape(text[1:-1])
            kind = TokenKind.STRING
        elif group == "NUMBER":
            value, kind = text, TokenKind.NUMBER
        elif group == "IDENT":
            value = text
            kind = TokenKind.KEYWORD if text in reserved else TokenKind.IDENT
        else:
            value, kind = text, _PUNCTUATION[group]  # type: ignore[index]
        tokens.append(Token(kind, value, line, col, line, end_col))
    return tokens, diagnostics
