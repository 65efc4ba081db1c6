"""ARDL front end: the textual language for authoring artefacts."""

from amdire.ardl.lexer import tokenize
from amdire.ardl.parser import parse

__all__ = ["parse", "tokenize"]
