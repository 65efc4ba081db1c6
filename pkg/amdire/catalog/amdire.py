"""Embedded AMDiRE catalog data.

Tables are plain tuples, loaded and self-checked by `amdire.catalog.load_catalog`.
Attribute specs are space separated `name:type` pairs; every concept also
accepts an implicit `description: text` attribute.
"""

from amdire.types.catalog import DomainStereotype, Level, MilestoneKind, Multiplicity
from amdire.types.catalog import RelationKind as R

_BIS = DomainStereotype.BIS
_EMB = DomainStereotype.EMBEDDED
_ONE = Multiplicity.EXACTLY_ONE
_OPT = Multiplicity.AT_MOST_ONE
_SOME = Multiplicity.AT_LEAST_ONE
_ANY = Multiplicity.ANY

#: id, display name, keyword, alias, level, owning role
ARTEFACT_TYPES = (
    ("ContextSpecification",      "Context Specification",      "context-specification",      "context",      Level.CONTEXT,      "BusinessAnalyst"),
    ("RequirementsSpecification", "Requirements Specification", "requirements-specification", "requirements", Level.REQUIREMENTS, "RequirementsEngineer"),
    ("SystemSpecification",       "System Specification",       "system-specification",       "system",       Level.SYSTEM,       "SystemArchitect"),
)

#: id, display name, responsible for
ROLES = (
    ("BusinessAnalyst",      "Business Analyst",      "ContextSpecification"),
    ("RequirementsEngineer", "Requirements Engineer", "RequirementsSpecification"),
    ("SystemArchitect",      "System Architect",      "SystemSpecification"),
)

#: id, artefact type, kind, trigger item
MILESTONES = (
    ("CS-M1", "ContextSpecification",      MilestoneKind.FIRST_ITEM_DEFINED, "ProjectScope"),
    ("CS-M2", "ContextSpecification",      MilestoneKind.FINALISED,          None),
    ("RS-M1", "RequirementsSpecification", MilestoneKind.FIRST_ITEM_DEFINED, "SystemVision"),
    ("RS-M2", "RequirementsSpecification", MilestoneKind.FINALISED,          None),
    ("SS-M1", "SystemSpecification",       MilestoneKind.FIRST_ITEM_DEFINED, "ArchitectureOverview"),
    ("SS-M2", "SystemSpecification",       MilestoneKind.FINALISED,          None),
)

#: artefact type, id, display name, keyword, domain stereotype
CONTENT_ITEMS = (
    ("ContextSpecification",      "ProjectScope",           "Project Scope",           "project-scope",           None),
    ("ContextSpecification",      "ConstraintsAndRules",    "Constraints and Rules",   "constraints-and-rules",   None),
    ("ContextSpecification",      "StakeholderModel",       "Stakeholder Model",       "stakeholder-model",       None),
    ("ContextSpecification",      "BusinessCase",           "Business Case",           "business-case",           None),
    ("ContextSpecification",      "ObjectivesAndGoals",     "Objectives and Goals",    "objectives-and-goals",    None),
    ("ContextSpecification",      "DomainModel",            "Domain Model",            "domain-model",            None),
    ("ContextSpecification",      "Glossary",               "Glossary",                "glossary",                None),
    ("RequirementsSpecification", "SystemVision",           "System Vision",           "system-vision",           None),
    ("RequirementsSpecification", "UsageModel",             "Usage Model",             "usage-model",             None),
    ("RequirementsSpecification", "ServiceModel",           "Service Model",           "service-model",           _BIS),
    ("RequirementsSpecification", "DataModel",              "Data Model",              "data-model",              None),
    ("RequirementsSpecification", "FunctionalHierarchy",    "Functional Hierarchy",    "functional-hierarchy",    None),
    ("RequirementsSpecification", "QualityRequirements",    "Quality Requirements",    "quality-requirements",    None),
    ("RequirementsSpecification", "DeploymentRequirements", "Deployment Requirements", "deployment-requirements", None),
    ("RequirementsSpecification", "SystemConstraints",      "System Constraints",      "system-constraints",      None),
    ("RequirementsSpecification", "ProcessRequirements",    "Process Requirements",    "process-requirements",    None),
    ("RequirementsSpecification", "RiskList",               "Risk List",               "risk-list",               None),
    ("SystemSpecification",       "ArchitectureOverview",   "Architecture Overview",   "architecture-overview",   None),
    ("SystemSpecification",       "FunctionModel",          "Function Model",          "function-model",          None),
    ("SystemSpecification",       "ComponentModel",         "Component Model",         "component-model",         None),
    ("SystemSpecification",       "BehaviourModel",         "Behaviour Model",         "behaviour-model",         None),
    ("SystemSpecification",       "SystemDataModel",        "Data Model",              "data-model",              None),
)

#: kind, home item, attributes, domain stereotype
CONCEPTS = (
    ("ProblemDescription",       "ProjectScope",           "",                                              None),
    ("StatementOfIntent",        "ProjectScope",           "",                                              None),
    ("PrimaryScope",             "ProjectScope",           "",                                              None),
    ("Constraint",               "ConstraintsAndRules",    "source:text",                                   None),
    ("Rule",                     "ConstraintsAndRules",    "source:text",                                   None),
    ("Stakeholder",              "StakeholderModel",       "role:text influence:text",                      None),
    ("UserGroup",                "StakeholderModel",       "size:number",                                   None),
    ("ReportingLine",            "StakeholderModel",       "",                                              None),
    ("Cost",                     "BusinessCase",           "amount:number currency:text",                   None),
    ("Value",                    "BusinessCase",           "amount:number currency:text",                   None),
    ("Risk",                     "BusinessCase",           "probability:number impact:text",                None),
    ("Rationale",                "BusinessCase",           "",                                              None),
    ("BusinessGoal",             "ObjectivesAndGoals",     "priority:number",                               None),
    ("UsageGoal",                "ObjectivesAndGoals",     "priority:number",                               None),
    ("SystemGoal",               "ObjectivesAndGoals",     "priority:number",                               None),
    ("QualityAttribute",         "ObjectivesAndGoals",     "category:text",                                 None),
    ("ExternalSystem",           "DomainModel",            "owner:text",                                    None),
    ("BusinessProcess",          "DomainModel",            "",                                              _BIS),
    ("BusinessTask",             "DomainModel",            "",                                              _BIS),
    ("ProcessStep",              "DomainModel",            "order:number",                                  _BIS),
    ("BusinessObject",           "DomainModel",            "properties:list",                               _BIS),
    ("OperationalEnvironment",   "DomainModel",            "",                                              None),
    ("BusinessRole",             "DomainModel",            "",                                              None),
    ("Term",                     "Glossary",               "abbreviation:text synonyms:list",               None),
    ("SystemUnderConsideration", "SystemVision",           "",                                              None),
    ("Feature",                  "SystemVision",           "priority:number",                               None),
    ("SystemBoundary",           "SystemVision",           "",                                              None),
    ("UseCase",                  "UsageModel",             "precondition:text postcondition:text",          None),
    ("FunctionalScenario",       "UsageModel",             "",                                              None),
    ("GenericScenario",          "UsageModel",             "",                                              None),
    ("Actor",                    "UsageModel",             "",                                              None),
    ("ActorAction",              "UsageModel",             "order:number",                                  None),
    ("SystemAction",             "UsageModel",             "order:number",                                  None),
    ("Event",                    "UsageModel",             "",                                              None),
    ("Service",                  "ServiceModel",           "",                                              None),
    ("CollaborationContract",    "ServiceModel",           "",                                              None),
    ("QualityOfService",         "ServiceModel",           "",                                              None),
    ("ServiceParameter",         "ServiceModel",           "unit:text",                                     None),
    ("ServiceLevel",             "ServiceModel",           "threshold:number",                              None),
    ("DataObject",               "DataModel",              "",                                              None),
    ("DataAttribute",            "DataModel",              "type:text",                                     None),
    ("UserVisibleFunction",      "FunctionalHierarchy",    "",                                              None),
    ("Mode",                     "FunctionalHierarchy",    "",                                              _EMB),
    ("Interface",                "FunctionalHierarchy",    "protocol:text",                                 None),
    ("QualityRequirement",       "QualityRequirements",    "category:text",                                 None),
    ("Metric",                   "QualityRequirements",    "unit:text threshold:number",                    None),
    ("NormativeReference",       "QualityRequirements",    "document:text",                                 None),
    ("DeploymentRequirement",    "DeploymentRequirements", "",                                              None),
    ("DeploymentEnvironment",    "DeploymentRequirements", "platform:text",                                 None),
    ("SystemConstraint",         "SystemConstraints",      "",                                              None),
    ("TechnicalConstraint",      "SystemConstraints",      "",                                              None),
    ("ProcessRequirement",       "ProcessRequirements",    "",                                              None),
    ("MandatoryTool",            "ProcessRequirements",    "vendor:text",                                   None),
    ("ComplianceStandard",       "ProcessRequirements",    "document:text",                                 None),
    ("RequirementsRisk",         "RiskList",               "probability:number impact:text",                None),
    ("RiskFactor",               "RiskList",               "",                                              None),
    ("RiskTrend",                "RiskList",               "direction:text",                                None),
    ("ComponentOverview",        "ArchitectureOverview",   "",                                              None),
    ("MajorFunction",            "ArchitectureOverview",   "",                                              None),
    ("ArchitectureLayer",        "ArchitectureOverview",   "",                                              None),
    ("SystemFunction",           "FunctionModel",          "internal:boolean",                              None),
    ("SystemInterface",          "FunctionModel",          "external:boolean",                              None),
    ("Component",                "ComponentModel",         "technology:text",                               None),
    ("Port",                     "ComponentModel",         "direction:text",                                None),
    ("Channel",                  "ComponentModel",         "protocol:text",                                 None),
    ("SystemEvent",              "BehaviourModel",         "",                                              None),
    ("State",                    "BehaviourModel",         "initial:boolean",                               _EMB),
    ("StateTransition",          "BehaviourModel",         "source:reference target:reference guard:text",  _EMB),
    ("StateMachine",             "BehaviourModel",         "",                                              None),
    ("DataElement",              "SystemDataModel",        "type:text",                                     None),
    ("DataType",                 "SystemDataModel",        "base:text",                                     None),
    ("DataRelationship",         "SystemDataModel",        "cardinality:text",                              None),
)

_GOALS = "BusinessGoal UsageGoal SystemGoal"
_PROCESS = "BusinessProcess BusinessTask ProcessStep"
_REQUIREMENTS = (
    "Feature UseCase FunctionalScenario UserVisibleFunction Service DataObject "
    "QualityRequirement DeploymentRequirement SystemConstraint ProcessRequirement"
)

#: relation, source kinds, target kinds, multiplicity
RELATION_RULES = (
    # Realisation, always from one level to the adjacent higher level
    (R.REALISES,    "Actor",                      "UserGroup ExternalSystem",                 _ONE),
    (R.REALISES,    "DataObject",                 "BusinessObject",                           _ANY),
    (R.REALISES,    "ActorAction SystemAction",   "ProcessStep",                              _ANY),
    (R.REALISES,    "SystemFunction",             "SystemAction UserVisibleFunction",         _SOME),
    (R.REALISES,    "SystemInterface",            "Interface",                                _SOME),
    (R.REALISES,    "DataElement",                "DataObject",                               _ONE),
    (R.REALISES,    "State",                      "Mode",                                     _OPT),
    (R.REALISES,    "SystemEvent",                "Event",                                    _OPT),
    (R.REALISES,    "MajorFunction",              "UserVisibleFunction",                      _ANY),
    # Refinement hierarchies
    (R.REFINES,     "BusinessGoal",               "BusinessGoal",                             _ANY),
    (R.REFINES,     "UsageGoal",                  "UsageGoal",                                _ANY),
    (R.REFINES,     "SystemGoal",                 "SystemGoal",                               _ANY),
    (R.REFINES,     "FunctionalScenario",         "UseCase",                                  _OPT),
    (R.REFINES,     "GenericScenario",            "SystemGoal",                               _ANY),
    (R.REFINES,     "QualityRequirement",         "QualityRequirement",                       _ANY),
    (R.REFINES,     "UserVisibleFunction",        "SystemAction UserVisibleFunction",         _ANY),
    (R.REFINES,     "Service",                    "UseCase",                                  _ANY),
    (R.REFINES,     "UseCase",                    "Feature",                                  _ANY),
    (R.REFINES,     "BusinessTask",               "BusinessProcess",                          _ANY),
    (R.REFINES,     "ProcessStep",                "BusinessTask BusinessProcess",             _ANY),
    (R.REFINES,     "SystemFunction",             "SystemFunction",                           _ANY),
    (R.REFINES,     "UserGroup",                  "Stakeholder",                              _ANY),
    # Satisfaction
    (R.SATISFIES,   "GenericScenario",            "QualityRequirement",                       _ANY),
    (R.SATISFIES,   "Value",                      "StatementOfIntent",                        _ANY),
    (R.SATISFIES,   _GOALS,                       "StatementOfIntent",                        _ANY),
    # Constraints
    (R.CONSTRAINS,  "Constraint Rule",            f"Constraint Rule {_PROCESS}",              _ANY),
    (R.CONSTRAINS,  "QualityRequirement",         "SystemAction",                             _ANY),
    (R.CONSTRAINS,  "SystemConstraint TechnicalConstraint", "SystemAction UserVisibleFunction QualityRequirement", _ANY),
    (R.CONSTRAINS,  "DeploymentRequirement",      "DeploymentEnvironment",                    _ANY),
    (R.CONSTRAINS,  _GOALS,                       _GOALS,                                     _ANY),
    # Goal ownership and demanded qualities
    (R.ISSUED_BY,   _GOALS,                       "Stakeholder UserGroup",                    _ONE),
    (R.DEMANDS_QUALITY_ATTRIBUTE, "SystemGoal",   "QualityAttribute",                         _SOME),
    # Composition
    (R.COMPOSES,    "Component",                  "Component",                                _ANY),
    (R.COMPOSES,    "RiskTrend",                  "RiskFactor",                               _ANY),
    (R.COMPOSES,    "ComponentOverview",          "Component",                                _ANY),
    (R.COMPOSES,    "SystemInterface",            "Port",                                     _ANY),
    # Triggering and assessment
    (R.TRIGGERS,    "Event",                      "FunctionalScenario UserVisibleFunction",   _ANY),
    (R.TRIGGERS,    "SystemEvent",                "StateTransition",                          _ANY),
    (R.ASSESSED_BY, "QualityRequirement",         "Metric NormativeReference",                _SOME),
    (R.CAUSED_BY,   "RequirementsRisk",           "RiskFactor",                               _SOME),
    # Associations
    (R.RELATED_TO,  "UsageGoal",                  "BusinessGoal",                             _SOME),
    (R.RELATED_TO,  "SystemGoal",                 "UsageGoal",                                _SOME),
    (R.RELATED_TO,  "Rationale",                  _GOALS,                                     _ANY),
    (R.RELATED_TO,  "Term",                       "Term",                                     _ANY),
    (R.RELATED_TO,  "GenericScenario",            "SystemGoal",                               _ANY),
    (R.RELATED_TO,  "ProcessRequirement",         "MandatoryTool ComplianceStandard",         _ANY),
    (R.RELATED_TO,  "ServiceParameter",           "Metric",                                   _OPT),
    (R.RELATED_TO,  "ServiceLevel",               "ServiceParameter",                         _ANY),
    (R.RELATED_TO,  "CollaborationContract",      "Service FunctionalScenario",               _ANY),
    (R.RELATED_TO,  "QualityOfService",           "Service",                                  _ANY),
    (R.RELATED_TO,  "Interface",                  "DataObject",                               _ANY),
    (R.RELATED_TO,  "Port",                       "DataType",                                 _ANY),
    (R.RELATED_TO,  "Channel",                    "Port",                                     _ANY),
    (R.RELATED_TO,  "DataElement",                "DataType",                                 _OPT),
    (R.RELATED_TO,  "DataElement",                "Component",                                _OPT),
    (R.RELATED_TO,  "SystemFunction",             "Component",                                _OPT),
    (R.RELATED_TO,  "ActorAction SystemAction",   "DataObject",                               _ANY),
    (R.RELATED_TO,  "BusinessTask ProcessStep",   "BusinessObject",                           _ANY),
    (R.RELATED_TO,  "ProcessStep",                "UserGroup",                                _OPT),
    (R.RELATED_TO,  "StateMachine",               "Component",                                _OPT),
    (R.RELATED_TO,  "RequirementsRisk",           _REQUIREMENTS,                              _ANY),
    (R.RELATED_TO,  "DataRelationship",           "DataElement",                              _ANY),
    (R.RELATED_TO,  "ArchitectureLayer",          "Component",                                _ANY),
    (R.RELATED_TO,  "Mode",                       "UserVisibleFunction",                      _ANY),
    (R.RELATED_TO,  "ReportingLine",              "Stakeholder",                              _ANY),
    (R.RELATED_TO,  "BusinessRole",               "BusinessProcess BusinessTask",             _ANY),
    (R.RELATED_TO,  "PrimaryScope",               "ProblemDescription",                       _ANY),
    (R.RELATED_TO,  "SystemBoundary",             "ExternalSystem Actor",                     _ANY),
    (R.RELATED_TO,  "SystemUnderConsideration",   "Feature",                                  _ANY),
    (R.RELATED_TO,  "OperationalEnvironment",     "ExternalSystem",                           _ANY),
)
