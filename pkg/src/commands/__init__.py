"""
Subcommands of the command-line application. Each module exposes
``register(subparsers, parents)`` and a handler returning the exit code.
"""

from __future__ import annotations

import argparse
from pathlib import Path

from src.conf.config import config
from src.models.dissection import DissectionStats
from src.models.report import VerificationReport
from src.schemas.report import ReportSchema, interval_text

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_LIMIT = 3


def exit_code(passed: bool) -> int:
    return EXIT_OK if passed else EXIT_FAILED


def add_report_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--report", choices=("text", "json"), default="text")


def render_report(report: VerificationReport, fmt: str) -> str:
    """
    The render_report function prints a verification report. The text form lists
    every check with its witnesses as certified decimal intervals; the json form
    carries the exact values as well.

    :param report: VerificationReport: The report
    :param fmt: str: "text" or "json"
    :return: The rendered report
    """
    if fmt == "json":
        return ReportSchema.from_domain(report).model_dump_json(indent=2)
    lines = []
    for check in report.checks:
        lines.append(f"{check.name:<20} {'PASS' if check.passed else 'FAIL'}")
        for key, value in check.witnesses.items():
            lo, hi = interval_text(*value.to_interval(config.report_eps))
            lines.append(f"    {key} = {value}  in [{lo}, {hi}]")
        if check.note:
            lines.append(f"    note: {check.note}")
    lines.append(f"verdict: {'PASS' if report.verdict else 'FAIL'}")
    return "\n".join(lines)


def render_stats(stats: DissectionStats) -> str:
    lo, hi = interval_text(*stats.total_area.to_interval(config.report_eps))
    return (
        f"pieces: {stats.piece_count}\n"
        f"max tower depth: {stats.max_tower_depth}\n"
        f"vertices: {stats.vertex_count}\n"
        f"total area: {stats.total_area}  in [{lo}, {hi}]"
    )


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
