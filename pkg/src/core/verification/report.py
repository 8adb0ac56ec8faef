"""Suite report data model and its plain-text rendering."""

from dataclasses import dataclass
from typing import List, Optional, Tuple


@dataclass(frozen=True)
class Check:
    """One named check; a failing check carries a concrete word or step index."""
    name: str
    passed: bool
    counterexample: Optional[str] = None


@dataclass(frozen=True)
class SuiteReport:
    name: str
    checks: Tuple[Check, ...]
    wall_time: float = 0.0

    @property
    def passed(self):
        return all(check.passed for check in self.checks)

    def lines(self) -> List[str]:
        return [render_check(self.name, check) for check in self.checks]

    def to_dict(self):
        return {
            'suite': self.name,
            'passed': self.passed,
            'wall_time': round(self.wall_time, 3),
            'checks': [
                {'name': c.name, 'passed': c.passed, 'counterexample': c.counterexample}
                for c in self.checks
            ],
        }


def render_check(suite, check) -> str:
    """`PASS|FAIL <suite>.<check> [counterexample]`"""
    line = f"{'PASS' if check.passed else 'FAIL'} {suite}.{check.name}"
    if check.counterexample is not None:
        line += f" {check.counterexample}"
    return line
