"""Verification reports and their serialization."""

from __future__ import annotations

import datetime as _dt
import json
from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"

# Entries under this prefix record findings about the printed formulas; they
# never decide the exit status of a run.
AUDIT_PREFIX = "audit."


@dataclass(frozen=True)
class Entry:
    identity: str
    variant: str
    status: str
    counterexample: tuple[str, ...] | None = None
    lhs: str | None = None
    rhs: str | None = None

    @property
    def gating(self) -> bool:
        return not self.identity.startswith(AUDIT_PREFIX)

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "variant": self.variant,
            "status": self.status,
            "counterexample": list(self.counterexample) if self.counterexample is not None else None,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Entry":
        ce = d.get("counterexample")
        return cls(d["identity"], d["variant"], d["status"],
                   tuple(ce) if ce is not None else None, d.get("lhs"), d.get("rhs"))


@dataclass
class VerificationReport:
    entries: list[Entry] = field(default_factory=list)
    seed: int | None = None
    mode: str = "exact"
    timestamp: _dt.datetime = field(default_factory=lambda: _dt.datetime.now(_dt.timezone.utc))

    def add(self, entry: Entry) -> None:
        self.entries.append(entry)

    def extend(self, other: "VerificationReport") -> None:
        self.entries.extend(other.entries)

    def sorted_entries(self) -> list[Entry]:
        return sorted(self.entries, key=lambda e: (e.identity, e.variant))

    def failures(self, gating_only: bool = False) -> list[Entry]:
        return [e for e in self.sorted_entries()
                if e.status == FAIL and (e.gating or not gating_only)]

    @property
    def ok(self) -> bool:
        return not self.failures(gating_only=True)

    def get(self, identity: str, variant: str | None = None) -> Entry:
        for e in self.entries:
            if e.identity == identity and (variant is None or e.variant == variant):
                return e
        raise KeyError(identity)


def emit_report(r: VerificationReport, format: str = "json") -> str:
    """Serialize a report.

    JSON is a sorted array of entry objects with fixed key order, so equal
    reports give byte-identical documents. Text is an aligned table headed
    by the seed and scalar mode.
    """
    entries = r.sorted_entries()
    if format == "json":
        return json.dumps([e.to_dict() for e in entries], indent=1, ensure_ascii=False)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")
    lines = [f"# seed={r.seed} mode={r.mode}"]
    if not entries:
        return lines[0] + "\n"
    width = max(len(e.identity) for e in entries)
    for e in entries:
        line = f"{e.status:4}  {e.variant:6}  {e.identity:{width}}"
        if e.status == FAIL and e.counterexample:
            line += "  at " + " | ".join(e.counterexample)
        if e.lhs is not None or e.rhs is not None:
            line += f"  lhs={e.lhs} rhs={e.rhs}"
        lines.append(line.rstrip())
    gating = [e for e in entries if e.gating]
    nfail = sum(e.status == FAIL for e in gating)
    lines.append(f"# {len(gating) - nfail}/{len(gating)} checks pass; "
                 f"{sum(e.status == FAIL for e in entries if not e.gating)} audit findings")
    return "\n".join(lines) + "\n"


def load_report(text: str) -> VerificationReport:
    return VerificationReport([Entry.from_dict(d) for d in json.loads(text)])
