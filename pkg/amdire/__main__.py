"""Command line entry point."""

from amdire.cli import main

main()
