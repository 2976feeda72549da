from __future__ import annotations

import argparse

from pydantic import TypeAdapter

from src.commands import add_report_flag, exit_code
from src.conf import messages
from src.conf.config import config
from src.exceptions import InvalidInput
from src.models.exactnum import parse_rational
from src.schemas.exact import from_exact
from src.schemas.report import NgonReportSchema, interval_text
from src.services.construction import ConstructionService, NgonResult

_SWEEP = TypeAdapter(list[NgonReportSchema])


def register(subparsers, parents: list[argparse.ArgumentParser]) -> None:
    parser = subparsers.add_parser(
        "ngon",
        parents=parents,
        help="decide whether regular n-gons on a and b add up to the one on c",
    )
    parser.add_argument("--a", required=True, type=parse_rational)
    parser.add_argument("--b", required=True, type=parse_rational)
    parser.add_argument("--c", required=True, type=parse_rational)
    parser.add_argument("--n", required=True, type=int)
    parser.add_argument("--n-max", type=int, help="check every n from --n up to this value")
    parser.add_argument("--precision", type=int, default=config.NGON_PRECISION, help="bits")
    add_report_flag(parser)
    parser.set_defaults(handler=ngon)


def _schema(result: NgonResult) -> NgonReportSchema:
    return NgonReportSchema(
        n=result.n,
        holds=result.holds,
        kappa=interval_text(*result.kappa),
        residual=interval_text(*result.residual),
        exact_kappa=None if result.exact_kappa is None else from_exact(result.exact_kappa),
        kappa_consistent=result.kappa_consistent,
    )


def _text(result: NgonResult) -> str:
    kappa = interval_text(*result.kappa)
    residual = interval_text(*result.residual)
    lines = [
        f"n = {result.n}: {'HOLDS' if result.holds else 'FAILS'}",
        f"    kappa in [{kappa[0]}, {kappa[1]}]",
        f"    residual in [{residual[0]}, {residual[1]}]",
    ]
    if result.exact_kappa is not None:
        agree = "agrees" if result.kappa_consistent else "DISAGREES"
        lines.append(f"    exact kappa = {result.exact_kappa} ({agree})")
    return "\n".join(lines)


def ngon(args: argparse.Namespace) -> int:
    """
    The ngon function checks one n, or the range n..n_max, and prints the
    verdict with the certified kappa and residual intervals.

    :param args: argparse.Namespace: Parsed command-line flags
    :return: 0 when additivity holds for every n checked, 1 otherwise
    """
    service = ConstructionService(precision=args.precision)
    last = args.n if args.n_max is None else args.n_max
    if last < args.n:
        raise InvalidInput(messages.EMPTY_NGON_RANGE.format(first=args.n, last=last))
    results = [service.ngon_additivity(args.a, args.b, args.c, n) for n in range(args.n, last + 1)]
    if args.report == "json":
        schemas = [_schema(r) for r in results]
        if len(schemas) == 1:
            print(schemas[0].model_dump_json(indent=2))
        else:
            print(_SWEEP.dump_json(schemas, indent=2).decode())
    else:
        print("\n".join(_text(r) for r in results))
    passed = all(r.holds and r.kappa_consistent for r in results)
    return exit_code(passed)
