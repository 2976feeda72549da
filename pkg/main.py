import argparse
import logging
import sys

from src.commands import EXIT_INVALID, EXIT_LIMIT, construct, ngon, verify, wbg
from src.conf.config import config
from src.dependencies.limits import tower_depth_limit
from src.exceptions import GeometryError, TowerLimitExceeded

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    """
    The build_parser function assembles the command-line application from the
    command modules; every subcommand shares the tower depth and logging flags.

    :return: The argument parser
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--max-tower-depth",
        type=int,
        default=config.MAX_TOWER_DEPTH,
        help="maximum number of nested square roots",
    )
    common.add_argument(
        "--log-level",
        default=config.LOG_LEVEL,
        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"),
        type=str.upper,
    )

    parser = argparse.ArgumentParser(
        prog="pythagoras",
        description="Exact verification of the equilateral proof of Pythagoras' theorem "
        "and constructive dissections.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in (construct, ngon, wbg, verify):
        module.register(subparsers, parents=[common])
    return parser


def main(argv: list[str] | None = None) -> int:
    """
    The main function runs one subcommand and maps errors to exit codes:
    invalid input is 2 and an exhausted tower depth is 3.

    :param argv: list[str] | None: Arguments without the program name
    :return: The exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_INVALID if err.code else 0
    except (GeometryError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID

    logging.basicConfig(
        level=args.log_level, format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    logger.debug("running %s with tower depth limit %d", args.command, args.max_tower_depth)
    try:
        with tower_depth_limit(args.max_tower_depth):
            return args.handler(args)
    except TowerLimitExceeded as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_LIMIT
    except (GeometryError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
