"""Suite reports: named pass/fail checks with witnesses, rendered as JSON or a pandas table."""

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import pandas as pd


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail", "witness": self.witness}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    window: Dict[str, Any]
    checks: List[CheckResult]
    wall_time: Optional[float] = None

    def __post_init__(self):
        self.checks = sorted(self.checks, key=lambda c: c.name)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failed(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "seed": self.seed,
            "window": self.window,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }
        if include_timing and self.wall_time is not None:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, sort_keys=False)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [{"check": c.name, "status": "pass" if c.passed else "FAIL", "witness": json.dumps(c.witness)} for c in self.checks],
            columns=["check", "status", "witness"],
        )

    def render(self) -> str:
        header = f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'} ({len(self.checks) - len(self.failed)}/{len(self.checks)})"
        return header + "\n" + self.to_frame().to_string(index=False, max_colwidth=60)
