from __future__ import annotations

from dataclasses import dataclass, field

MAX_RECORDED = 25


@dataclass
class Report:
    """Outcome of a law checker: how many instances were checked and which failed."""

    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    failure_count: int = 0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def __bool__(self):
        return self.ok

    def tick(self, n: int = 1):
        self.checked += n

    def fail(self, message: str):
        self.failure_count += 1
        if len(self.failures) < MAX_RECORDED:
            self.failures.append(message)

    def check(self, condition: bool, message) -> bool:
        self.checked += 1
        if not condition:
            self.fail(message() if callable(message) else message)
        return condition

    def note(self, message: str):
        self.notes.append(message)

    def absorb(self, other: "Report", prefix: str = ""):
        self.checked += other.checked
        self.failure_count += other.failure_count
        for f in other.failures:
            if len(self.failures) < MAX_RECORDED:
                self.failures.append(f"{prefix}{f}")
        self.notes.extend(f"{prefix}{n}" for n in other.notes)
        return self

    @property
    def counterexample(self):
        return self.failures[0] if self.failures else None

    def summary(self) -> str:
        status = "pass" if self.ok else "FAIL"
        line = f"{self.name}: {status} ({self.checked} checked"
        if not self.ok:
            line += f", {self.failure_count} failed; first: {self.failures[0]}"
        return line + ")"

    def __repr__(self):
        return f"<Report {self.summary()}>"
