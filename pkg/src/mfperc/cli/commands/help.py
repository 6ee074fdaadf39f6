import argparse
import json
from typing import List

from mfperc import env_var
from mfperc.annotations import InvalidParameterError
from mfperc.cli._parser import parser, subcommands
from mfperc.config import DEFAULTS, FAMILIES
from mfperc.graph import FAMILY_PARAMETERS

__all__ = [
    "HELP_TOPICS",
    "mfperc_help"
]


def _families() -> None:
    for family in FAMILIES:
        print(f"{family:10} --params {','.join(f'{name}=...' for name in FAMILY_PARAMETERS[family])}")


def _defaults() -> None:
    print(json.dumps(DEFAULTS, indent=4))


def _environment() -> None:
    for name in env_var.list_vars():
        print(f"{name}={getattr(env_var, name) or ''}")


HELP_TOPICS = {
    "families": _families,
    "defaults": _defaults,
    "environment": _environment
}
"Help topics which are not subcommands."


def mfperc_help(
        topics: List[str]
) -> None:
    """
    Print out help on mfperc, its subcommands or a help topic.

    For argument documentation, see ``mfperc_help_parser``.

    :exception InvalidParameterError: Raised naming every unknown topic, after the known ones were printed.
    """
    if not topics:
        parser.print_help()
        return

    unknown = []
    for topic in topics:
        if topic in HELP_TOPICS:
            HELP_TOPICS[topic]()
        elif topic in subcommands.choices:
            subcommands.choices[topic].print_help()
        else:
            unknown.append(topic)
            continue
        print()

    if unknown:
        raise InvalidParameterError(f"No help on {', '.join(unknown)}. Try one of "
                                    f"{', '.join([*subcommands.choices, *HELP_TOPICS])}")


mfperc_help_parser = subcommands.add_parser(
    "help",
    description=
    """\
  Print help on mfperc, its subcommands and the following topics:

    families     the graph families and the parameters they take
    defaults     the numeric caps and tolerances mfperc runs with
    environment  the environment variables mfperc reads and their values

  Without arguments, this is the same as mfperc --help.\
    """,
    help="print this help and exit",
    formatter_class=argparse.RawDescriptionHelpFormatter
)
mfperc_help_parser.add_argument(
    "topics", nargs="*",
    help="mfperc commands or help topics",
    action="store", default=[], metavar="TOPIC"
)
mfperc_help_parser.set_defaults(func=mfperc_help)
