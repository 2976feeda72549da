from __future__ import annotations

import argparse
import logging

from src.commands import add_report_flag, exit_code, render_report, write_text
from src.models.exactnum import parse_rational
from src.services.construction import ConstructionService, RightTriangleInput
from src.services.svg import SvgService

logger = logging.getLogger(__name__)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "construct",
        parents=parents,
        help="verify the rotation construction for a rational right triangle",
    )
    parser.add_argument("--a", required=True, type=parse_rational, help="cathetus BC, p/q")
    parser.add_argument("--b", required=True, type=parse_rational, help="cathetus AC, p/q")
    parser.add_argument("--mirrored", action="store_true", help="rotate clockwise at A")
    parser.add_argument("--svg", help="write a figure to this path")
    parser.add_argument(
        "--figure", choices=("configuration", "decompositions"), default="configuration"
    )
    add_report_flag(parser)
    parser.set_defaults(handler=construct)


def construct(args: argparse.Namespace) -> int:
    """
    The construct function builds the configuration for the given legs, prints
    the report and optionally draws it.

    :param args: argparse.Namespace: Parsed command-line flags
    :return: 0 when every check passes, 1 otherwise
    """
    service = ConstructionService()
    cfg = service.build(RightTriangleInput(args.a, args.b), mirrored=args.mirrored)
    report = service.verify_configuration(cfg)
    print(render_report(report, args.report))
    if args.svg:
        svg = SvgService()
        if args.figure == "decompositions" and not cfg.mirrored:
            text = svg.decompositions_svg(cfg)
        else:
            text = svg.configuration_svg(cfg)
        write_text(args.svg, text)
        logger.info("figure written to %s", args.svg)
    return exit_code(report.verdict)
