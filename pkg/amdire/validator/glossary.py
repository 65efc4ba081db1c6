"""Opt-in glossary coverage check."""

from collections.abc import Iterator
from re import compile as compile_regex

from amdire.codes import UNDEFINED_TERM
from amdire.types.diagnostics import Diagnostic
from amdire.types.graph import Reference
from amdire.validator import ValidationContext

_CANDIDATE = compile_regex(r"\b(?:[A-Z][a-z0-9]+(?:[A-Z][a-z0-9]*)+|[A-Z]{2,}[0-9]*)\b")


def _defined_terms(context: ValidationContext) -> set[str]:
    defined: set[str] = set()
    for term in context.graph.of_kind("Term"):
        defined.add(term.name.lower())
        abbreviation = term.attributes.get("abbreviation")
        if isinstance(abbreviation, str):
            defined.add(abbreviation.lower())
        synonyms = term.attributes.get("synonyms")
        if isinstance(synonyms, tuple):
            defined.update(
                (synonym.path if isinstance(synonym, Reference) else str(synonym)).lower()
                for synonym in synonyms
            )
    return defined


def glossary_coverage(context: ValidationContext) -> Iterator[Diagnostic]:
    """Terms used in titles are defined in the glossary (AMD091)."""
    if not context.config.glossary_check or not context.config.enabled("Glossary"):
        return
    defined = _defined_terms(context)
    for element in sorted(context.graph.elements.values(), key=lambda e: e.id):
        if not element.title or element.kind == "Term":
            continue
        missing = sorted(
            {
                word
                for word in _CANDIDATE.findall(element.title)
                if word.lower() not in defined
            }
        )
        for word in missing:
            yield UNDEFINED_TERM.diagnostic(
                f"'{word}' used in the title of {context.describe(element)} "
                "is not defined in the glossary",
                element.span,
                item=element.home_item,
            )


CHECKS = (glossary_coverage,)
