"""Verification report records, one JSON line per report."""

from typing import Optional

from pydantic import BaseModel

from fibwords.models.params import Convention
from fibwords.models.report import IdentityId, ReportStatus, VerificationReport


class ReportRecord(BaseModel):
    """Keys: identity, a, b, n, convention, status, detail. Timing is left out."""

    identity: IdentityId
    a: int
    b: int
    n: int
    convention: Convention
    status: ReportStatus
    detail: Optional[str] = None

    @classmethod
    def from_report(cls, report: VerificationReport) -> "ReportRecord":
        return cls(
            identity=report.identity,
            a=report.params.a,
            b=report.params.b,
            n=report.n,
            convention=report.params.convention,
            status=report.status,
            detail=report.detail,
        )


class GridSummaryRecord(BaseModel):
    """Totals printed after a verification stream."""

    reports: int
    passed: int
    failed: int
    skipped: int

    @classmethod
    def from_reports(cls, reports: list[VerificationReport]) -> "GridSummaryRecord":
        failed = sum(1 for report in reports if report.status is ReportStatus.FAIL)
        skipped = sum(1 for report in reports if report.status is ReportStatus.SKIPPED)
        return cls(
            reports=len(reports),
            passed=len(reports) - failed - skipped,
            failed=failed,
            skipped=skipped,
        )
