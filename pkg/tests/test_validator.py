"""Tests for the validator rules."""

import re
from pathlib import Path
from typing import TYPE_CHECKING

import pytest

from amdire.project import load_project
from amdire.tailoring import default_config
from amdire.types.catalog import DomainProfile
from amdire.types.diagnostics import Diagnostic, Severity
from amdire.types.tailoring import ProjectConfig
from amdire.validator import apply_config, discover_checks, list_rules, validate
from tests.conftest import ATM_DIR, codes, link_sources

if TYPE_CHECKING:
    from amdire.project import Project

CONTEXT_HEADER = 'context-specification "Context" {\n'
REQUIREMENTS_HEADER = 'requirements-specification "Requirements" {\n'
SYSTEM_HEADER = 'system-specification "System" {\n'


def _check(files: dict[str, str], **config: object) -> list[Diagnostic]:
    """Link sources and validate them with an otherwise empty configuration."""
    graph, diagnostics = link_sources(files)
    assert [d for d in diagnostics if d.severity is Severity.ERROR] == []
    return validate(graph, config=ProjectConfig(name="demo", **config))


def _block(header: str, item: str, body: str) -> str:
    """Return an artefact file with one content item."""
    return f"{header}  {item} {{\n{body}\n  }}\n}}\n"


def _realises_lines() -> list[tuple[str, int]]:
    """Return (file, line) of every realisation clause of the ATM sample."""
    return [
        (path.name, number)
        for path in sorted(ATM_DIR.glob("*.ardl"))
        for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), 1)
        if line.strip().startswith("realises ")
    ]


class TestSampleProject:
    """The ATM sample is a complete, consistent model."""

    def test_clean(self, atm_project: "Project") -> None:
        """No diagnostics at all."""
        assert atm_project.diagnostics == ()
        assert not atm_project.has_errors

    def test_validate_directly(self, atm_project: "Project") -> None:
        """Validation of the linked graph agrees with the project load."""
        assert validate(atm_project.graph, config=atm_project.config) == []

    def test_every_item_filled(self, atm_project: "Project") -> None:
        """All 22 content items hold elements."""
        assert sum(len(items) for items in atm_project.config.items.values()) == 22
        for items in atm_project.config.items.values():
            for item in items:
                assert atm_project.graph.in_item(item), item

    @pytest.mark.parametrize(
        ("file", "line"), _realises_lines(), ids=lambda value: str(value)
    )
    def test_removed_realisation_is_an_error(
        self, atm_dir: Path, file: str, line: int
    ) -> None:
        """Deleting any realisation clause produces an error at that element."""
        path = atm_dir / file
        lines = path.read_text(encoding="utf-8").splitlines()
        lines[line - 1] = ""
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        project = load_project(atm_dir)
        assert any(
            diagnostic.severity is Severity.ERROR
            and diagnostic.span.file == file
            and diagnostic.span.covers_line(line)
            for diagnostic in project.diagnostics
        ), project.diagnostics


class TestRegistry:
    """Check discovery and rule metadata."""

    def test_discovered(self) -> None:
        """Every validator submodule contributes its checks."""
        names = {check.__name__ for check in discover_checks()}
        assert {
            "missing_content_items",
            "required_realisations",
            "quality_reachable",
            "goal_cycles",
            "use_case_scenarios",
            "risks_caused",
            "component_cycles",
            "relation_kinds",
            "glossary_coverage",
        } <= names

    def test_rules_sorted(self) -> None:
        """Rules are listed by code, with an anchor each."""
        rules = list_rules()
        assert [rule.code for rule in rules] == sorted(rule.code for rule in rules)
        assert all(rule.anchor for rule in rules)
        assert {"AMD020", "AMD041", "AMD091"} <= {rule.code for rule in rules}

    def test_rules_are_model_codes(self) -> None:
        """Only model rules are listed, with the realisation anchor on AMD033."""
        rules = {rule.code: rule for rule in list_rules()}
        assert all(re.fullmatch(r"AMD\d{3}", code) for code in rules)
        assert "user-visible functions" in rules["AMD033"].anchor


class TestContentItems:
    """Presence of mandatory content items."""

    def test_missing_and_empty(self) -> None:
        """Missing items are reported at the header, empty ones too."""
        graph, _ = link_sources(
            {"context": _block(CONTEXT_HEADER, "project-scope", "")}
        )
        diagnostics = validate(graph, config=default_config(name="demo"))
        messages = [d.message for d in diagnostics if d.code == "AMD020"]
        assert (
            "Mandatory content item Project Scope of the Context Specification is empty"
            in messages
        )
        assert (
            "Mandatory content item Glossary of the Context Specification is missing"
            in messages
        )
        assert len(messages) == 22

    def test_missing_artefact_at_manifest(self) -> None:
        """Items of an artefact without file are reported at the manifest."""
        graph, _ = link_sources({"context": ""})
        diagnostics = validate(graph, config=default_config(name="demo"))
        assert {d.span.file for d in diagnostics if d.code == "AMD020"} == {
            "amdire-project.txt"
        }

    def test_empty_requirements_for_bis(self) -> None:
        """An empty requirements file misses each of its ten items once."""
        graph, _ = link_sources({"requirements": REQUIREMENTS_HEADER + "}\n"})
        config = default_config(domain_profile=DomainProfile.BIS, name="demo")
        findings = [
            d
            for d in validate(graph, config=config)
            if d.code == "AMD020" and d.span.file == "requirements.ardl"
        ]
        assert len(findings) == 10
        assert len({d.item for d in findings}) == 10

    @pytest.mark.parametrize(
        ("profile", "expected"),
        [(DomainProfile.BIS, 1), (DomainProfile.EMBEDDED, 0)],
    )
    def test_service_model_absent(self, profile: DomainProfile, expected: int) -> None:
        """A missing service model is reported once, and only for BIS projects."""
        graph, _ = link_sources({"requirements": REQUIREMENTS_HEADER + "}\n"})
        diagnostics = validate(
            graph, config=default_config(domain_profile=profile, name="demo")
        )
        assert [d.item for d in diagnostics if d.code == "AMD020"].count(
            "ServiceModel"
        ) == expected

    def test_disabled_item_not_required(self) -> None:
        """Disabled items are not required."""
        config = default_config(name="demo").model_copy(
            update={"disabled": frozenset({"Glossary"})}
        )
        graph, _ = link_sources({"context": ""})
        assert not any(
            d.item == "Glossary" for d in validate(graph, config=config)
        )

    def test_stereotyped_content(self) -> None:
        """Service models are reserved to business information systems."""
        files = {
            "requirements": _block(
                REQUIREMENTS_HEADER, "service-model", '    service Pay "Payment" { }'
            )
        }
        assert "AMD081" in codes(_check(files, domain_profile=DomainProfile.EMBEDDED))
        assert "AMD081" not in codes(_check(files, domain_profile=DomainProfile.BIS))


class TestRealisation:
    """Cross-level realisation."""

    def test_actor(self) -> None:
        """Actors realise user groups or external systems."""
        diagnostics = _check(
            {"requirements": _block(REQUIREMENTS_HEADER, "usage-model", "    actor Clerk { }")}
        )
        assert codes(diagnostics) == ["AMD030"]
        assert diagnostics[0].message == (
            "Actor 'requirements.Clerk' does not realise any UserGroup or ExternalSystem"
        )

    def test_internal_system_function_exempt(self) -> None:
        """Internal system functions need no realisation."""
        diagnostics = _check(
            {
                "system": _block(
                    SYSTEM_HEADER,
                    "function-model",
                    "    system-function Log { internal: true }\n"
                    "    system-function Show { }",
                )
            }
        )
        assert codes(diagnostics) == ["AMD033"]
        assert "Show" in diagnostics[0].message

    def test_only_external_interfaces(self) -> None:
        """Only external system interfaces need realisation."""
        diagnostics = _check(
            {
                "system": _block(
                    SYSTEM_HEADER,
                    "function-model",
                    "    system-interface Bus { }\n"
                    "    system-interface Host { external: true }",
                )
            }
        )
        assert codes(diagnostics) == ["AMD036"]
        assert "Host" in diagnostics[0].message

    def test_data_element(self) -> None:
        """Data elements realise data objects."""
        diagnostics = _check(
            {"system": _block(SYSTEM_HEADER, "data-model", "    data-element Record { }")}
        )
        assert codes(diagnostics) == ["AMD034"]

    def test_state_realises_non_mode(self) -> None:
        """States realise nothing but modes."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER,
                    "functional-hierarchy",
                    "    user-visible-function Pay { }",
                ),
                "system": _block(
                    SYSTEM_HEADER, "behaviour-model", "    state Idle { realises Pay }"
                ),
            }
        )
        assert "AMD035" in codes(diagnostics)
        assert "AMD080" not in codes(diagnostics)

    def test_embedded_rules_skipped_for_bis(self) -> None:
        """Realisation of modes is not required outside embedded projects."""
        files = {"system": _block(SYSTEM_HEADER, "behaviour-model", "    state Idle { }")}
        assert codes(_check(files)) == ["AMD037"]
        assert codes(_check(files, domain_profile=DomainProfile.BIS)) == []

    def test_warnings(self) -> None:
        """Optional realisations are warnings by default."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER, "data-model", "    data-object Account { }"
                )
            }
        )
        assert codes(diagnostics) == ["AMD031"]
        assert diagnostics[0].severity is Severity.WARNING


class TestQuality:
    """Quality requirement derivation."""

    GOALS = _block(
        CONTEXT_HEADER,
        "objectives-and-goals",
        "    business-goal Sell { issued-by Board }\n"
        "    usage-goal Fast { related-to Sell issued-by Board }\n"
        "    system-goal Quick { related-to Fast issued-by Board demands Speed }\n"
        "    quality-attribute Speed { }",
    ).replace(
        "  objectives-and-goals {",
        "  stakeholder-model {\n    stakeholder Board { }\n  }\n  objectives-and-goals {",
    )

    def test_not_assessed(self) -> None:
        """Quality requirements need a metric or normative reference."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER,
                    "quality-requirements",
                    "    quality-requirement Latency { }",
                )
            }
        )
        assert codes(diagnostics) == ["AMD040", "AMD041"]

    def test_reachable(self) -> None:
        """A generic scenario links the system goal to the requirement."""
        diagnostics = _check(
            {
                "context": self.GOALS,
                "requirements": REQUIREMENTS_HEADER
                + "  usage-model {\n"
                "    generic-scenario Rush { refines Quick satisfies Latency }\n"
                "  }\n"
                "  quality-requirements {\n"
                "    quality-requirement Latency { assessed-by Seconds }\n"
                "    quality-requirement Peak { refines Latency assessed-by Seconds }\n"
                "    metric Seconds { unit: \"s\" }\n"
                "  }\n"
                "}\n",
            }
        )
        assert codes(diagnostics) == []

    def test_unreachable(self) -> None:
        """Scenarios not derived from a system goal do not count."""
        diagnostics = _check(
            {
                "requirements": REQUIREMENTS_HEADER
                + "  usage-model {\n"
                "    generic-scenario Rush { satisfies Latency }\n"
                "  }\n"
                "  quality-requirements {\n"
                "    quality-requirement Latency { assessed-by Norm }\n"
                "    normative-reference Norm { document: \"ISO 9241\" }\n"
                "  }\n"
                "}\n",
            }
        )
        assert codes(diagnostics) == ["AMD041"]


class TestGoals:
    """Goal model checks."""

    def test_complete(self) -> None:
        """A related, issued goal chain is clean."""
        assert _check({"context": TestQuality.GOALS}) == []

    def test_unrelated(self) -> None:
        """Usage and system goals relate upwards."""
        diagnostics = _check(
            {
                "context": _block(
                    CONTEXT_HEADER,
                    "objectives-and-goals",
                    "    usage-goal Fast { }\n    system-goal Quick { }",
                )
            },
            severity_overrides={"AMD053": "off", "AMD054": "off"},
        )
        assert codes(diagnostics) == ["AMD050", "AMD051"]

    def test_cycle(self) -> None:
        """Goal refinement is acyclic."""
        diagnostics = _check(
            {
                "context": _block(
                    CONTEXT_HEADER,
                    "objectives-and-goals",
                    "    business-goal A { refines B }\n    business-goal B { refines A }",
                )
            },
            severity_overrides={"AMD053": "off"},
        )
        assert codes(diagnostics) == ["AMD052"]
        assert diagnostics[0].message == (
            "Goal hierarchy cycle: context.A -> context.B -> context.A"
        )
        assert len(diagnostics[0].related) == 1

    def test_not_issued_and_no_quality(self) -> None:
        """Goals are issued, system goals demand qualities."""
        diagnostics = _check(
            {
                "context": _block(
                    CONTEXT_HEADER, "objectives-and-goals", "    system-goal Quick { }"
                )
            },
            severity_overrides={"AMD051": "off"},
        )
        assert codes(diagnostics) == ["AMD053", "AMD054"]
        assert all(d.severity is Severity.WARNING for d in diagnostics)


class TestUsageAndRisks:
    """Usage model and risk list checks."""

    def test_use_case_without_scenario(self) -> None:
        """Use cases hold a functional scenario."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER, "usage-model", "    use-case Withdraw { }"
                )
            }
        )
        assert codes(diagnostics) == ["AMD060"]

    def test_refining_scenario_counts(self) -> None:
        """A scenario refining the use case counts, untriggered ones are reported."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER,
                    "usage-model",
                    "    use-case Withdraw { }\n"
                    "    functional-scenario Standard { refines Withdraw }",
                )
            }
        )
        assert codes(diagnostics) == ["AMD061"]

    def test_triggered(self) -> None:
        """Events trigger scenarios."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER,
                    "usage-model",
                    "    use-case Withdraw { functional-scenario Standard { } }\n"
                    "    event CardInserted { triggers Standard }",
                )
            }
        )
        assert diagnostics == []

    def test_risk_without_factor(self) -> None:
        """Risks are caused by risk factors."""
        diagnostics = _check(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER,
                    "risk-list",
                    "    requirements-risk Churn { }\n"
                    "    requirements-risk Vague { caused-by Turnover }\n"
                    "    risk-factor Turnover { }",
                )
            }
        )
        assert codes(diagnostics) == ["AMD070"]
        assert "Churn" in diagnostics[0].message


class TestSystemModel:
    """Component and behaviour checks."""

    def test_component_cycle(self) -> None:
        """Decomposition is acyclic."""
        diagnostics = _check(
            {
                "system": _block(
                    SYSTEM_HEADER,
                    "component-model",
                    "    component A { composes B }\n"
                    "    component B { composes C }\n"
                    "    component C { composes A }",
                )
            }
        )
        assert codes(diagnostics) == ["AMD071"]
        assert diagnostics[0].message == (
            "Component decomposition cycle: system.A -> system.B -> system.C -> system.A"
        )

    def test_self_composition(self) -> None:
        """A component composing itself is a cycle."""
        diagnostics = _check(
            {"system": _block(SYSTEM_HEADER, "component-model", "    component A { composes A }")}
        )
        assert codes(diagnostics) == ["AMD071"]

    def test_transition_states(self) -> None:
        """Transitions connect existing states."""
        diagnostics = _check(
            {
                "system": _block(
                    SYSTEM_HEADER,
                    "behaviour-model",
                    "    state-machine M {\n"
                    "      state Idle { }\n"
                    "      state-transition Go { source: Idle target: Nowhere }\n"
                    "      state-transition Back { source: M }\n"
                    "    }",
                )
            },
            severity_overrides={"AMD037": "off"},
        )
        messages = [d.message for d in diagnostics if d.code == "AMD072"]
        assert messages == [
            "StateTransition 'system.M.Go' target state 'Nowhere' does not exist",
            "StateTransition 'system.M.Back' has no target state",
            "StateTransition 'system.M.Back' source 'M' is a StateMachine, not a State",
        ]


class TestRelations:
    """Relation rule conformance."""

    def test_kind_not_allowed(self) -> None:
        """Edges must follow the rule table."""
        diagnostics = _check(
            {
                "requirements": REQUIREMENTS_HEADER
                + "  system-vision {\n    feature Cash { }\n  }\n"
                "  usage-model {\n    actor Clerk { realises Cash }\n  }\n}\n"
            }
        )
        assert codes(diagnostics) == ["AMD030", "AMD080"]
        assert diagnostics[1].message == (
            "'realises' from Actor 'requirements.Clerk' to Feature 'requirements.Cash' "
            "is not allowed, expected target kinds: ExternalSystem, UserGroup"
        )

    def test_relation_unknown_for_kind(self) -> None:
        """Kinds without the relation get a hint."""
        diagnostics = _check(
            {
                "context": _block(
                    CONTEXT_HEADER, "glossary", "    term ATM { realises PIN }\n    term PIN { }"
                )
            }
        )
        assert codes(diagnostics) == ["AMD080"]
        assert diagnostics[0].message.endswith("Term has no 'realises' relation")

    def test_multiplicity(self) -> None:
        """Exactly-one relations have one target."""
        diagnostics = _check(
            {
                "context": _block(
                    CONTEXT_HEADER,
                    "stakeholder-model",
                    "    user-group Customers { }\n    user-group Clerks { }",
                ),
                "requirements": _block(
                    REQUIREMENTS_HEADER,
                    "usage-model",
                    "    actor Person {\n"
                    "      realises Customers\n"
                    "      realises Clerks\n"
                    "    }",
                ),
            }
        )
        assert codes(diagnostics) == ["AMD082"]
        assert diagnostics[0].span.start_line == 5
        assert diagnostics[0].related[0].note == "first target"


class TestGlossary:
    """Opt-in glossary coverage."""

    FILES = {
        "context": _block(
            CONTEXT_HEADER,
            "glossary",
            '    term ATM { synonyms: [CashMachine] }\n    term PIN "PIN" { }',
        ),
        "requirements": _block(
            REQUIREMENTS_HEADER,
            "system-vision",
            '    feature Cash "ATM CashMachine with PIN and NFC" { }',
        ),
    }

    def test_off_by_default(self) -> None:
        """No findings unless enabled."""
        assert _check(self.FILES) == []

    def test_undefined_terms(self) -> None:
        """Capitalised compounds and acronyms must be glossary terms."""
        diagnostics = _check(
            self.FILES,
            glossary_check=True,
            items={"ContextSpecification": ("Glossary",)},
        )
        assert codes(diagnostics) == ["AMD091"]
        assert diagnostics[0].severity is Severity.INFO
        assert diagnostics[0].message.startswith("'NFC' used in the title")


class TestConfiguration:
    """Tailoring and severity overrides."""

    FILES = {
        "requirements": _block(
            REQUIREMENTS_HEADER, "risk-list", "    requirements-risk Churn { }"
        )
    }

    def test_override_severity(self) -> None:
        """Overrides change the severity."""
        diagnostics = _check(self.FILES, severity_overrides={"AMD070": "warning"})
        assert [d.severity for d in diagnostics] == [Severity.WARNING]

    def test_override_off(self) -> None:
        """`off` drops the finding."""
        assert _check(self.FILES, severity_overrides={"AMD070": "off"}) == []

    def test_disabled_item_silenced(self) -> None:
        """Findings in disabled items are dropped."""
        assert _check(self.FILES, disabled=frozenset({"RiskList"})) == []

    def test_profile_silences_items(self) -> None:
        """Findings in items outside the profile are dropped."""
        graph, _ = link_sources(
            {
                "requirements": _block(
                    REQUIREMENTS_HEADER, "service-model", "    service Pay { }"
                )
            }
        )
        [finding] = validate(graph, config=ProjectConfig(domain_profile=DomainProfile.EMBEDDED))
        scoped = finding.model_copy(update={"item": "ServiceModel"})
        assert apply_config(
            [scoped], ProjectConfig(domain_profile=DomainProfile.EMBEDDED)
        ) == []
