from __future__ import annotations

import argparse

from src.commands import add_report_flag, exit_code, render_report
from src.repositories.files import DissectionRepo
from src.services.dissection import DissectionService


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "verify",
        parents=parents,
        help="check a dissection certificate",
    )
    parser.add_argument("--dissection", required=True, help="dissection JSON file")
    add_report_flag(parser)
    parser.set_defaults(handler=verify)


def verify(args: argparse.Namespace) -> int:
    """
    The verify function loads a dissection certificate and runs the six checks.

    :param args: argparse.Namespace: Parsed command-line flags
    :return: 0 when the certificate is valid, 1 otherwise
    """
    dissection = DissectionRepo().load(args.dissection)
    report = DissectionService().verify_dissection(dissection)
    print(render_report(report, args.report))
    return exit_code(report.verdict)
