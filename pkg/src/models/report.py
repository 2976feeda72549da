from __future__ import annotations

from dataclasses import dataclass, field

from src.models.exactnum import FieldElem


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witnesses: dict[str, FieldElem] = field(default_factory=dict)
    note: str | None = None

    __hash__ = None


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    __hash__ = None

    @property
    def verdict(self) -> bool:
        return all(check.passed for check in self.checks)

    def __getitem__(self, name: str) -> CheckResult:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]
