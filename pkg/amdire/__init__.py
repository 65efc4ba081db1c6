"""Artefact-based requirements engineering toolchain.

This package lets engineers author context, requirements, and system
specifications in ARDL, a block-structured textual DSL, and checks them
against an embedded artefact model: content-item structure, cross-level
realisation, goal and quality refinement, tailoring, and milestone maturity.
"""
