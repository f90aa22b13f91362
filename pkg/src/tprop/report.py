"""Pass/fail bookkeeping shared by the randomized structural checks."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool = True
    trials: int = 0
    witness: str | None = None

    def record(self, ok: bool, witness: str) -> None:
        self.trials += 1
        if not ok and self.passed:
            self.passed = False
            self.witness = witness


@dataclass
class CheckReport:
    results: dict[str, CheckResult] = field(default_factory=dict)

    def __getitem__(self, name: str) -> CheckResult:
        if name not in self.results:
            self.results[name] = CheckResult(name)
        return self.results[name]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results.values() if not r.passed]

    def to_dict(self) -> dict:
        return {
            name: {"passed": r.passed, "trials": r.trials, "witness": r.witness}
            for name, r in self.results.items()
        }
