from __future__ import annotations

import argparse
import logging

from src.commands import exit_code, render_report, render_stats, write_text
from src.models.dissection import Dissection
from src.models.exactnum import parse_rational
from src.repositories.files import DissectionRepo, PolygonRepo
from src.services.dissection import DissectionService
from src.services.geometry import EXACT_NGONS
from src.services.svg import SvgService
from src.services.wbg import WbgService

logger = logging.getLogger(__name__)


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    wbg_parser = subparsers.add_parser(
        "wbg",
        parents=parents,
        help="dissect source polygons into target polygons of the same total area",
    )
    wbg_parser.add_argument("--source", required=True, nargs="+", help="polygon JSON files")
    wbg_parser.add_argument("--target", required=True, nargs="+", help="polygon JSON files")
    wbg_parser.add_argument("--out", required=True, help="dissection JSON to write")
    wbg_parser.add_argument("--svg", help="write a side-by-side figure to this path")
    wbg_parser.set_defaults(handler=wbg)

    pythagoras_parser = subparsers.add_parser(
        "pythagoras",
        parents=parents,
        help="dissect the regular n-gons on a and b into the one on the hypotenuse",
    )
    pythagoras_parser.add_argument("--a", required=True, type=parse_rational)
    pythagoras_parser.add_argument("--b", required=True, type=parse_rational)
    pythagoras_parser.add_argument("--n", type=int, default=3, choices=EXACT_NGONS)
    pythagoras_parser.add_argument("--out", required=True, help="dissection JSON to write")
    pythagoras_parser.add_argument("--svg", help="write a side-by-side figure to this path")
    pythagoras_parser.set_defaults(handler=pythagoras)


def _emit(dissection: Dissection, args: argparse.Namespace) -> int:
    """
    The _emit function verifies a freshly built dissection, saves it and prints
    its statistics. The file is written even when a check fails so the failure
    can be inspected.

    :param dissection: Dissection: The constructed dissection
    :param args: argparse.Namespace: Parsed flags with out and svg
    :return: 0 when the dissection verifies, 1 otherwise
    """
    service = DissectionService()
    report = service.verify_dissection(dissection)
    DissectionRepo().save(args.out, dissection)
    print(render_stats(service.stats(dissection)))
    if not report.verdict:
        print(render_report(report, "text"))
    if args.svg:
        write_text(args.svg, SvgService().dissection_svg(dissection))
        logger.info("figure written to %s", args.svg)
    return exit_code(report.verdict)


def wbg(args: argparse.Namespace) -> int:
    repo = PolygonRepo()
    sources = [repo.load(path) for path in args.source]
    targets = [repo.load(path) for path in args.target]
    return _emit(WbgService().equidecompose(sources, targets), args)


def pythagoras(args: argparse.Namespace) -> int:
    return _emit(WbgService().pythagorean_dissection(args.a, args.b, args.n), args)
