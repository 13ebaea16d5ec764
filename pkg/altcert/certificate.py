from __future__ import annotations

from typing import Any

from pydantic import BaseModel, Field

from .types import BoundsCase, Verdict

__all__ = [
    'CheckResult',
    'HyperbolicityCertificate',
    'VolumeBounds',
    'RunReport'
]


class CheckResult(BaseModel):
    name: str
    verdict: Verdict
    witness: dict[str, Any] | None = None
    detail: str | None = None

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.FAIL

    @classmethod
    def ok(cls, name: str, detail: str | None = None) -> CheckResult:
        return cls(name=name, verdict=Verdict.PASS, detail=detail)

    @classmethod
    def fail(cls, name: str, witness: dict[str, Any], detail: str | None = None) -> CheckResult:
        return cls(name=name, verdict=Verdict.FAIL, witness=witness, detail=detail)


class HyperbolicityCertificate(BaseModel):
    verdict: Verdict
    checks: list[CheckResult]
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def aggregate(cls, checks: list[CheckResult], notes: list[str] | None = None) -> HyperbolicityCertificate:
        verdict = Verdict.PASS

        for check in checks:
            verdict &= check.verdict

        return cls(verdict=verdict, checks=checks, notes=notes or [])

    def __getitem__(self, name: str) -> CheckResult:
        return next(check for check in self.checks if check.name == name)

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if check.verdict is Verdict.FAIL]


class VolumeBounds(BaseModel):
    case: BoundsCase
    epsilon: int
    chi: int
    lower: float
    lower_strict: bool
    upper: float


class RunReport(BaseModel):
    command: str
    input_digest: str
    verdict: Verdict
    checks: list[CheckResult] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)
    bounds: VolumeBounds | None = None
    outputs: dict[str, Any] = Field(default_factory=dict)
    timing: float | None = None

    def payload(self) -> dict[str, Any]:
        """Report content without timing, identical across runs on the same input."""

        return self.model_dump(mode='json', exclude={'timing'})
