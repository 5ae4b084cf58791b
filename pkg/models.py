"""Data models for operator expressions and suite reports."""

from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple


class OpName(Enum):
    """Primitive operators of the expression language."""
    SIGMA = "sigma"
    GIAMBELLI = "giambelli"
    GAMMA = "gamma"
    GAMMA_STAR = "gamma_star"
    DJKM = "djkm"
    DJKM_HAT = "djkm_hat"
    R_OP = "r_op"
    ZETA = "zeta"
    SCALE = "scale"

    @property
    def is_series(self) -> bool:
        """Does the operator produce a series in z?"""
        return self in (OpName.SIGMA, OpName.GAMMA, OpName.GAMMA_STAR, OpName.R_OP)


@dataclass(frozen=True)
class Primitive:
    """One token of an expression, e.g. sigma(bar+) or djkm(1,0)."""
    name: OpName
    args: Tuple[Any, ...] = ()
    text: str = ""


@dataclass
class OperatorExpr:
    """A composition of primitives, listed left to right as written.

    The rightmost primitive acts on the seed first.
    """
    factors: List[Primitive]
    text: str = ""

    @property
    def has_series(self) -> bool:
        return any(p.name.is_series for p in self.factors)


@dataclass
class CaseResult:
    """Outcome of one identity check."""
    suite: str
    case_id: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"suite": self.suite, "case": self.case_id, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        if self.error:
            out["error"] = self.error
        return out


@dataclass
class SuiteReport:
    """Aggregated results of one suite run."""
    name: str
    size: str
    results: List[CaseResult] = field(default_factory=list)
    started_at: datetime = field(default_factory=datetime.now)
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return len(self.results)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.results if r.passed)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def first_failure(self) -> Optional[CaseResult]:
        for result in self.results:
            if not result.passed:
                return result
        return None

    def by_suite(self) -> Dict[str, Tuple[int, int]]:
        counts: Dict[str, Tuple[int, int]] = {}
        for r in self.results:
            passed, total = counts.get(r.suite, (0, 0))
            counts[r.suite] = (passed + int(r.passed), total + 1)
        return counts

    def summary_line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.passed}/{self.total}"

    def to_json(self) -> Dict[str, Any]:
        failure = self.first_failure()
        return {
            "suite": self.name,
            "size": self.size,
            "status": "PASS" if self.ok else "FAIL",
            "passed": self.passed,
            "total": self.total,
            "suites": {k: {"passed": p, "total": t} for k, (p, t) in sorted(self.by_suite().items())},
            "counterexample": failure.to_json() if failure else None,
        }
