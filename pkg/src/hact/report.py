"""Check reports: typed pass/fail entries with deterministic rendering."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Entry:
    suite: str
    check: str
    element: str
    ok: bool
    witness: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        bits = [self.suite, self.check, self.element, status]
        if self.witness:
            bits.append(self.witness)
        return "  ".join(bits)


@dataclass
class Report:
    entries: list = field(default_factory=list)

    def add(self, suite: str, check: str, element: str, ok: bool, witness: str = ""):
        self.entries.append(Entry(suite, check, element, bool(ok), witness))

    def extend(self, other: "Report"):
        self.entries.extend(other.entries)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def render(self) -> str:
        lines = [e.line() for e in self.entries]
        lines.append("checks: %d  failures: %d" % (len(self.entries), len(self.failures)))
        return "\n".join(lines) + "\n"
