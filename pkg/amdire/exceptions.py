"""Toolchain exceptions.

Problems in user-authored specifications are reported as diagnostics, never
raised. The exceptions below signal build defects, invalid API or command line
usage, and IO failures.
"""

from collections.abc import Iterable


class AmdireError(Exception):
    """Base toolchain error."""


class CatalogIntegrityError(AmdireError):
    """Exception occurring when the embedded catalog fails its self-check."""


class UnknownKindError(AmdireError, LookupError):
    """Exception occurring when a concept kind is not part of the catalog."""

    def __init__(self, kind: str, what: str = "concept kind") -> None:
        """Create an unknown kind error.

        Args:
            kind: The name that was looked up.
            what: What the name was expected to denote.
        """
        self.kind = kind
        super().__init__(f"Unknown {what}: '{kind}'")


class ResolutionError(AmdireError, LookupError):
    """Exception occurring when a qualified name cannot be resolved."""


class NotFoundError(ResolutionError):
    """No element matches the qualified name."""

    def __init__(self, name: str) -> None:
        """Create a not found error.

        Args:
            name: The qualified name that was looked up.
        """
        self.name = name
        super().__init__(f"No element named '{name}'")


class AmbiguousReferenceError(ResolutionError):
    """A partially qualified name matches several elements."""

    def __init__(self, name: str, candidates: Iterable[str]) -> None:
        """Create an ambiguous reference error.

        Args:
            name: The partially qualified name that was looked up.
            candidates: Fully qualified names of all matching elements.
        """
        self.name = name
        self.candidates = tuple(candidates)
        super().__init__(
            f"Reference '{name}' is ambiguous, candidates: {', '.join(self.candidates)}"
        )


class UsageError(AmdireError):
    """Exception occurring when the toolchain is used with invalid arguments."""


class ProjectError(AmdireError):
    """Exception occurring when project files cannot be read."""
