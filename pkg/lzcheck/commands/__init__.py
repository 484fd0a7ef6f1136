"""
Command registration for the lzcheck command line.
"""

from lzcheck.commands import catalog, check, pair, pullback, table, tame

COMMANDS = (check, table, tame, pullback, pair, catalog)


def register_commands(subparsers):
    """Register every subcommand parser."""
    for command in COMMANDS:
        command.register(subparsers)
