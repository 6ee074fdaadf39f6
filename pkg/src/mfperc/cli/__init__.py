from mfperc.cli._parser import parser
from mfperc.cli.commands import *
from mfperc.cli.main import main

__all__ = [
    "commands",
    "parser",
    "main"
]
