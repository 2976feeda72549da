from __future__ import annotations

from fractions import Fraction

from pydantic import BaseModel

from src.conf.config import config
from src.models.exactnum import FieldElem, format_decimal
from src.models.report import VerificationReport
from src.schemas.exact import ExactValue, from_exact

INTERVAL_DECIMALS = 12


def interval_text(lo: Fraction, hi: Fraction, places: int = INTERVAL_DECIMALS) -> tuple[str, str]:
    return format_decimal(lo, places, "floor"), format_decimal(hi, places, "ceil")


class WitnessSchema(BaseModel):
    exact: ExactValue
    interval: tuple[str, str]

    @classmethod
    def from_domain(cls, value: FieldElem) -> WitnessSchema:
        lo, hi = value.to_interval(config.report_eps)
        return cls(exact=from_exact(value), interval=interval_text(lo, hi))


class CheckSchema(BaseModel):
    name: str
    passed: bool
    witnesses: dict[str, WitnessSchema] = {}
    note: str | None = None


class ReportSchema(BaseModel):
    verdict: bool
    checks: list[CheckSchema]

    @classmethod
    def from_domain(cls, report: VerificationReport) -> ReportSchema:
        return cls(
            verdict=report.verdict,
            checks=[
                CheckSchema(
                    name=check.name,
                    passed=check.passed,
                    witnesses={
                        key: WitnessSchema.from_domain(value)
                        for key, value in check.witnesses.items()
                    },
                    note=check.note,
                )
                for check in report.checks
            ],
        )


class NgonReportSchema(BaseModel):
    n: int
    holds: bool
    kappa: tuple[str, str]
    residual: tuple[str, str]
    exact_kappa: ExactValue | None = None
    kappa_consistent: bool = True
