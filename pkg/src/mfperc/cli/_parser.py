import argparse

from mfperc.config import FAMILIES

__all__ = [
    "parser",
    "subcommands"
]

_DESCRIPTION = """\
 Mfperc computes and samples the quantities behind bond percolation on large, high-girth or transitive regular
 graphs near the critical probability p = 1/(d-1).

graphs:
  Most commands read a graph either from an edge-list file (--graph FILE) or build a member of a family
  (--family NAME --params k=v,...). Known families: """ + ", ".join(FAMILIES) + """.
  Edge-list files start with a line "n m" followed by m lines "u v" with 0 <= u < v < n.

output:
  Tables are written as CSV to the file given by --out, or to standard output.
  Informational and debug messages go to standard error.

experiments:
  The window, supercritical and conditions commands accept a JSON experiment config (--config FILE). Checks
  configured there are evaluated after the run; a failing check makes mfperc exit with code 1.
  The directory of relative output files can be set with the MFPERC_OUTPUT_DIR variable, the default number of
  worker processes with MFPERC_WORKERS.\
"""

# The parser of the application.
# For more information, see the ``subcommands`` object.
parser = argparse.ArgumentParser(
    prog="mfperc",
    description=_DESCRIPTION,
    formatter_class=argparse.RawDescriptionHelpFormatter
)

parser_logging = parser.add_argument_group("logging")
parser_logging.add_argument(
    "-q", "--quiet",
    help="disable informational output",
    action="store_true", default=False, dest="quiet"
)
parser_logging.add_argument(
    "-v", "--verbose",
    help="enable debug output",
    action="store_true", default=False, dest="verbose"
)

subcommands = parser.add_subparsers(title="commands", help=None, required=True)
"""
The object containing all subcommands. The application will only run if a subcommand is given.

All subcommands (e.g. gen/percolate) are defined in separate files (e.g. mfperc/cli/commands/gen.py).
Each of these subcommands implements its logic in a function receiving all arguments passed to the subcommand.
The function must be registered as default for the ``func`` parameter of that subcommand.

Example:

    from mfperc.cli._parser import subcommands

    def mfperc_foo(bar: bool):
        print("Bar" if bar else "No bar")

    mfperc_foo_parser = subcommands.add_parser("foo", description="...", help="...")
    mfperc_foo_parser.add_argument("-b", "--foo-bar", action="store_true", dest="bar", default=False)
    mfperc_foo_parser.set_defaults(func=mfperc_foo)

Naming conventions: mfperc_name for function, mfperc_name_parser for corresponding parser.
Commands reading a graph add the shared graph options with ``mfperc.cli._inputs.add_graph_arguments``.
"""
