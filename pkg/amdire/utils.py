"""Common utilities."""

from base64 import b32encode
from re import compile as compile_regex
import sys
from typing import TextIO
from uuid import uuid4 as uuid

from pydantic import JsonValue
from pydantic_core import to_json

#: CamelCase word boundary
_CAMEL_BOUNDARY = compile_regex(r"(?<=[a-z0-9])(?=[A-Z])|(?<=[A-Z])(?=[A-Z][a-z])")


def webuuid() -> str:
    """Generates a base32 encoded UUID string.

    Returns:
        str: The base32 encoded and formatted UUID string.
    """
    return b32encode(uuid().bytes).rstrip(b"=").lower().decode()


def kebab_case(name: str) -> str:
    """Convert a CamelCase identifier to its kebab-case keyword.

    Args:
        name: CamelCase identifier (e.g. "UserVisibleFunction").

    Returns:
        Kebab-case keyword (e.g. "user-visible-function").
    """
    return _CAMEL_BOUNDARY.sub("-", name).lower()


def json_dumps(value: JsonValue, *, indent: int | None = None) -> str:
    """Serialize a JSON value deterministically.

    Key order follows insertion order, so callers control the output layout.

    Args:
        value: The value to serialize.
        indent: Optional indentation.

    Returns:
        JSON text.
    """
    return to_json(value, indent=indent).decode()


def _write(stream: TextIO, msg: str) -> None:
    """Write and flush a message, ignoring closed streams.

    Args:
        stream: Destination stream.
        msg: Message to write.
    """
    try:
        stream.write(msg)
        stream.flush()
    except ValueError as error:  # pragma: no cover
        if "closed" in str(error):
            return
        raise


def stdout_write(text: str) -> None:
    """Writes program output to the standard output.

    Args:
        text: Text to write, a trailing newline is added if missing.
    """
    _write(sys.stdout, text if text.endswith("\n") else f"{text}\n")


def stderr_write(value: JsonValue) -> None:
    """Writes a JSON-encoded value to the standard error.

    Args:
        value: The value to be JSON-encoded and written to standard error.
    """
    _write(sys.stderr, f"{json_dumps(value)}\n")


def stderr_print(text: str) -> None:
    """Writes a human-readable message to the standard error.

    Args:
        text: Text to write, a trailing newline is added if missing.
    """
    _write(sys.stderr, text if text.endswith("\n") else f"{text}\n")
