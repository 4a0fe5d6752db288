# Main CLI for the Mullineux fixed-point toolkit
import argparse
import sys

from settings import VERSION
from utils import log_err
from tools.cli import COMMANDS, add_all_parsers
from tools.models import MullineuxError

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mfix", description="Mullineux map • fixed points • cores • q-series")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    sub = parser.add_subparsers(dest="cmd", required=True)
    add_all_parsers(sub)
    return parser

def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.cmd](args)
    except (MullineuxError, ValueError) as exc:
        log_err(str(exc))
        return 2

if __name__ == "__main__":
    sys.exit(main())
