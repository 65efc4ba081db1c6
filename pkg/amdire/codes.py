"""Registry of diagnostic codes.

Every diagnostic emitted by the toolchain is created from one of the rules
below, so the registry doubles as the documentation listed by `amdire rules`.
ARD codes come from the ARDL front end, AMD codes from linking, tailoring and
validation.
"""

from typing import Final

from amdire.types.diagnostics import Rule, RulePhase, Severity

#: All rules by code
ALL_RULES: dict[str, Rule] = {}

_ERROR = Severity.ERROR
_WARNING = Severity.WARNING
_INFO = Severity.INFO

#: Anchor of rules with no grounding in the method itself
PLUMBING = "plumbing"


def _rule(
    code: str,
    title: str,
    severity: Severity,
    scope: str,
    anchor: str,
    phase: RulePhase,
) -> Rule:
    """Create and register a rule.

    Args:
        code: Unique code.
        title: Short description.
        severity: Default severity.
        scope: Concept kind, content item id, or file-level scope.
        anchor: Method statement the rule enforces, or "plumbing".
        phase: Pipeline phase emitting the rule.

    Returns:
        The rule.
    """
    rule = Rule(
        code=code,
        title=title,
        default_severity=severity,
        scope=scope,
        anchor=anchor,
        phase=phase,
    )
    if code in ALL_RULES:  # pragma: no cover
        msg = f"Duplicate rule code {code}"
        raise ValueError(msg)
    ALL_RULES[code] = rule
    return rule


# Lexer and parser
UNTERMINATED_STRING: Final = _rule(
    "ARD001", "Unterminated string literal", _ERROR, "file", PLUMBING, "lex"
)
ILLEGAL_CHARACTER: Final = _rule(
    "ARD002", "Illegal character", _ERROR, "file", PLUMBING, "lex"
)
UNEXPECTED_TOKEN: Final = _rule(
    "ARD010", "Unexpected token", _ERROR, "file", PLUMBING, "parse"
)

# Linker
UNRESOLVED_REFERENCE: Final = _rule(
    "AMD001", "Unresolved reference", _ERROR, "RelationClause", PLUMBING, "link"
)
DUPLICATE_NAME: Final = _rule(
    "AMD002", "Duplicate fully qualified name", _ERROR, "ElementDecl", PLUMBING, "link"
)
AMBIGUOUS_REFERENCE: Final = _rule(
    "AMD003", "Ambiguous reference", _ERROR, "RelationClause", PLUMBING, "link"
)
MISPLACED_ELEMENT: Final = _rule(
    "AMD004",
    "Element kind not housed in the enclosing content item",
    _ERROR,
    "ElementDecl",
    "every concept kind has exactly one home content item",
    "link",
)
FOREIGN_CONTENT_ITEM: Final = _rule(
    "AMD005",
    "Content item not part of the file's artefact type",
    _ERROR,
    "ContentItemBlock",
    "content items are defined per artefact type",
    "link",
)
DUPLICATE_RELATION: Final = _rule(
    "AMD006", "Duplicate relation", _WARNING, "RelationClause", PLUMBING, "link"
)
DUPLICATE_ARTEFACT: Final = _rule(
    "AMD007",
    "Artefact type declared by more than one file",
    _ERROR,
    "ArtefactDecl",
    "three artefact types, one artefact each",
    "link",
)
DUPLICATE_ASSIGNMENT: Final = _rule(
    "AMD008",
    "Attribute or status assigned twice",
    _WARNING,
    "AttributeAssign",
    PLUMBING,
    "link",
)
MISSING_HEADER: Final = _rule(
    "AMD009", "Missing artefact header", _ERROR, "file", PLUMBING, "link"
)
UNKNOWN_ATTRIBUTE: Final = _rule(
    "AMD011",
    "Attribute not declared for the concept kind",
    _WARNING,
    "AttributeAssign",
    PLUMBING,
    "link",
)
ATTRIBUTE_TYPE_MISMATCH: Final = _rule(
    "AMD012",
    "Attribute value does not match its declared type",
    _WARNING,
    "AttributeAssign",
    PLUMBING,
    "link",
)

# Validator
MISSING_CONTENT_ITEM: Final = _rule(
    "AMD020",
    "Missing or empty mandatory content item",
    _ERROR,
    "ContentItem",
    "content item lists of the three artefact types",
    "validate",
)
ACTOR_NOT_REALISED: Final = _rule(
    "AMD030",
    "Actor without realisation of a user group or external system",
    _ERROR,
    "Actor",
    '"realise either User Groups or External Systems"',
    "validate",
)
DATA_OBJECT_NOT_REALISED: Final = _rule(
    "AMD031",
    "Data object without realisation of a business object",
    _WARNING,
    "DataObject",
    '"realise selected Business Objects"',
    "validate",
)
ACTION_NOT_REALISED: Final = _rule(
    "AMD032",
    "Actor or system action without realisation of a process step",
    _WARNING,
    "SystemAction",
    '"realise selected Process Steps"',
    "validate",
)
SYSTEM_FUNCTION_NOT_REALISED: Final = _rule(
    "AMD033",
    "Non-internal system function without realisation of a system action or user-visible function",
    _ERROR,
    "SystemFunction",
    '"realise user-visible functions"',
    "validate",
)
DATA_ELEMENT_NOT_REALISED: Final = _rule(
    "AMD034",
    "Data element without realisation of a data object",
    _ERROR,
    "DataElement",
    '"realise the Data Objects specified"',
    "validate",
)
STATE_REALISES_NON_MODE: Final = _rule(
    "AMD035",
    "State realising something other than a mode",
    _ERROR,
    "State",
    '"States realise the Modes"',
    "validate",
)
INTERFACE_NOT_REALISED: Final = _rule(
    "AMD036",
    "External system interface without realisation of an interface",
    _ERROR,
    "SystemInterface",
    'realisation "limited to the external interfaces and functions"',
    "validate",
)
STATE_NOT_REALISED: Final = _rule(
    "AMD037",
    "State without realisation of a mode",
    _WARNING,
    "State",
    '"States realise the Modes"',
    "validate",
)
MAJOR_FUNCTION_NOT_REALISED: Final = _rule(
    "AMD038",
    "Major function without realisation of a user-visible function",
    _WARNING,
    "MajorFunction",
    "architecture overview names the major system functions",
    "validate",
)
QUALITY_NOT_ASSESSED: Final = _rule(
    "AMD040",
    "Quality requirement not assessed by a metric or normative reference",
    _ERROR,
    "QualityRequirement",
    '"either a Normative Reference" or a Metric',
    "validate",
)
QUALITY_NOT_REACHABLE: Final = _rule(
    "AMD041",
    "Quality requirement not reachable from a system goal via a generic scenario",
    _WARNING,
    "QualityRequirement",
    '"assessable quality requirements"',
    "validate",
)
USAGE_GOAL_UNRELATED: Final = _rule(
    "AMD050",
    "Usage goal not related to a business goal",
    _ERROR,
    "UsageGoal",
    '"each usage goal is related to a business goal"',
    "validate",
)
SYSTEM_GOAL_UNRELATED: Final = _rule(
    "AMD051",
    "System goal not related to a usage goal",
    _ERROR,
    "SystemGoal",
    "system goals are related to usage goals",
    "validate",
)
GOAL_CYCLE: Final = _rule(
    "AMD052",
    "Goal hierarchy cycle",
    _ERROR,
    "ObjectivesAndGoals",
    'goals "build a hierarchy"',
    "validate",
)
GOAL_NOT_ISSUED: Final = _rule(
    "AMD053",
    "Goal without an issuing stakeholder",
    _WARNING,
    "BusinessGoal",
    "goals are issued by stakeholders",
    "validate",
)
SYSTEM_GOAL_WITHOUT_QUALITY: Final = _rule(
    "AMD054",
    "System goal demanding no quality attribute",
    _WARNING,
    "SystemGoal",
    "system goals demand quality attributes",
    "validate",
)
USE_CASE_WITHOUT_SCENARIO: Final = _rule(
    "AMD060",
    "Use case without functional scenario",
    _ERROR,
    "UseCase",
    '"at least one Functional Scenario"',
    "validate",
)
SCENARIO_NOT_TRIGGERED: Final = _rule(
    "AMD061",
    "Functional scenario not triggered by an event",
    _WARNING,
    "FunctionalScenario",
    '"Functional scenarios are triggered by Events"',
    "validate",
)
RISK_WITHOUT_FACTOR: Final = _rule(
    "AMD070",
    "Requirements risk not caused by a risk factor",
    _ERROR,
    "RequirementsRisk",
    '"caused by a Risk Factor"',
    "validate",
)
COMPONENT_CYCLE: Final = _rule(
    "AMD071",
    "Component decomposition cycle",
    _ERROR,
    "Component",
    'components "decomposed into more further sub-components"',
    "validate",
)
TRANSITION_STATE_MISSING: Final = _rule(
    "AMD072",
    "State transition with missing source or target state",
    _ERROR,
    "StateTransition",
    '"Events, States and State Transitions"',
    "validate",
)
RELATION_NOT_ALLOWED: Final = _rule(
    "AMD080",
    "Relation not allowed between these kinds",
    _ERROR,
    "RelationRule",
    "content model relations",
    "validate",
)
STEREOTYPED_CONTENT: Final = _rule(
    "AMD081",
    "Content item stereotyped for another domain",
    _ERROR,
    "ServiceModel",
    "<<Domain>> stereotype of content items",
    "validate",
)
MULTIPLICITY_EXCEEDED: Final = _rule(
    "AMD082",
    "Relation multiplicity exceeded",
    _ERROR,
    "RelationRule",
    "content model relations",
    "validate",
)

# Tailoring
TRIGGER_ITEM_DISABLED: Final = _rule(
    "AMD084",
    "Milestone trigger item cannot be disabled",
    _ERROR,
    "ContentItem",
    '"the first content item is defined"',
    "tailor",
)
UNJUSTIFIED_DISABLE: Final = _rule(
    "AMD085",
    "Core content item disabled without justification",
    _ERROR,
    "ContentItem",
    "company-specific customisation",
    "tailor",
)
CONFLICTING_PROFILES: Final = _rule(
    "AMD086",
    "Conflicting domain profiles between tailoring levels",
    _ERROR,
    "TailoringProfile",
    "customisation at organisational and project level",
    "tailor",
)
UNKNOWN_FACTOR: Final = _rule(
    "AMD087",
    "Unknown situation factor or factor value",
    _ERROR,
    "SituationFactor",
    "situation-aware creation of content items",
    "tailor",
)
FORCED_ITEM_DISABLED: Final = _rule(
    "AMD088",
    "Situation factor forces a disabled content item",
    _ERROR,
    "ContentItem",
    "situation-aware creation of content items",
    "tailor",
)
INVALID_TAILORING: Final = _rule(
    "AMD089",
    "Unknown content item, role or directive in tailoring file",
    _ERROR,
    "TailoringProfile",
    PLUMBING,
    "tailor",
)

# Manifest and opt-in checks
UNKNOWN_MANIFEST_LINE: Final = _rule(
    "AMD090", "Unknown manifest line", _WARNING, "manifest", PLUMBING, "manifest"
)
UNDEFINED_TERM: Final = _rule(
    "AMD091",
    "Term used in a title is not defined in the glossary",
    _INFO,
    "Glossary",
    'the glossary "contains all important Terms"',
    "validate",
)
INVALID_MANIFEST_VALUE: Final = _rule(
    "AMD092", "Invalid manifest value", _ERROR, "manifest", PLUMBING, "manifest"
)


def list_rules() -> list[Rule]:
    """Return every registered rule.

    Returns:
        Rules sorted by code.
    """
    return [ALL_RULES[code] for code in sorted(ALL_RULES)]
