"""Suite reports and their text / JSON renderings."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

ARTIFACT_VERSION = "0.1.0"
STATUSES = ("pass", "fail", "report")


@dataclass
class CaseRecord:
    case_id: str
    params: dict
    status: str
    expected: str
    observed: str
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: list = field(default_factory=list)
    artifact_version: str = ARTIFACT_VERSION

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for c in self.cases:
            out[c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        # "report" cases are informational and never fail a run
        return all(c.status != "fail" for c in self.cases)

    def to_dict(self) -> dict:
        return {
            "artifact_version": self.artifact_version,
            "seed": self.seed,
            "suite": self.suite,
            "cases": [asdict(c) for c in self.cases],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteReport":
        return cls(
            suite=d["suite"],
            seed=d["seed"],
            cases=[CaseRecord(**c) for c in d["cases"]],
            artifact_version=d["artifact_version"],
        )


def emit_report(r: SuiteReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(r.to_dict(), indent=2, sort_keys=False) + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"suite {r.suite} (seed {r.seed}, version {r.artifact_version})"]
    for c in r.cases:
        lines.append(f"  {c.status.upper():6} {c.case_id}  expected={c.expected}  observed={c.observed}  [{c.elapsed_ms} ms]")
    n = r.counts()
    lines.append(f"  {n['pass']} passed, {n['fail']} failed, {n['report']} report-only")
    return ("\n".join(lines) + "\n").encode()


def strip_timing(d: dict) -> dict:
    """Copy of a serialized report with elapsed_ms zeroed, for determinism comparisons."""
    out = dict(d)
    out["cases"] = [dict(c, elapsed_ms=0) for c in d["cases"]]
    return out
