"""Replay report model: check results, text rendering, deterministic JSON.

Verdicts
--------
PASS / FAIL speak for themselves.  EVIDENCE marks a statistical or sampled
check that supports a claim without proving it (it never hard-fails the
run).  ASSUMED-BY-PAPER marks a claim the source argument uses without an
independent mechanical proof here; the check still gathers what evidence it
can.  SKIPPED means the run configuration made the check inapplicable (for
example, no field of the right characteristic was selected).  The
"evidence class" {EVIDENCE, ASSUMED-BY-PAPER} is what aggregation treats as
acceptable-but-not-proven; SKIPPED never counts as a pass.

Determinism
-----------
The JSON emitter is byte-identical across runs of the same configuration:
the per-check "ms" key is always written as 0 there, and the measured
wall-clock timings appear only in the text report.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

VERSION = "0.1.0"

PASS = "PASS"
FAIL = "FAIL"
EVIDENCE = "EVIDENCE"
ASSUMED = "ASSUMED-BY-PAPER"
SKIPPED = "SKIPPED"

VERDICTS = (PASS, FAIL, EVIDENCE, ASSUMED, SKIPPED)
EVIDENCE_CLASS = (EVIDENCE, ASSUMED)

DEFAULT_FIELDS = ("Q", "Q(i)", "F2", "F3", "F5")

AXIOM_LINE = ("axiom (fixed-field degree): a finite group H of field "
              "automorphisms of F satisfies [F : F^H] = |H|")
ASSUMPTION_LINE = ("assumption: declared quadratic extension polynomials are "
                   "irreducible over their base field")


@dataclass
class RunConfig:
    seed: int = 0
    fields: tuple = DEFAULT_FIELDS
    degree_bound: int = 2
    obstruction_degree: int = 4
    samples: int = 100

    def __post_init__(self):
        self.fields = tuple(self.fields)


@dataclass
class CheckResult:
    id: str
    anchor: str
    verdict: str
    details: list = dc_field(default_factory=list)
    ms: int = 0


@dataclass
class Report:
    config: RunConfig
    checks: list

    @property
    def exit_code(self) -> int:
        return 1 if any(c.verdict == FAIL for c in self.checks) else 0

    def counts(self) -> dict:
        out = {v: 0 for v in VERDICTS}
        for c in self.checks:
            out[c.verdict] += 1
        return out

    def to_json(self) -> str:
        payload = {
            "run": {
                "seed": self.config.seed,
                "fields": list(self.config.fields),
                "version": VERSION,
            },
            "checks": [
                {
                    "id": c.id,
                    "verdict": c.verdict,
                    "anchor": c.anchor,
                    "details": list(c.details),
                    "ms": 0,
                }
                for c in self.checks
            ],
        }
        return json.dumps(payload, indent=2) + "\n"

    def to_text(self) -> str:
        cfg = self.config
        lines = [
            f"replay {VERSION}  seed={cfg.seed}  fields={','.join(cfg.fields)}  "
            f"degree-bound={cfg.degree_bound}  samples={cfg.samples}",
            AXIOM_LINE,
            ASSUMPTION_LINE,
            "",
        ]
        for c in self.checks:
            lines.append(f"{c.id:<16} {c.verdict:<16} {c.ms:>6} ms  {c.anchor}")
            for d in c.details:
                lines.append(f"{'':16} - {d}")
        n = self.counts()
        lines.append("")
        lines.append(
            f"summary: {len(self.checks)} checks  "
            + "  ".join(f"{v} {n[v]}" for v in VERDICTS if n[v]))
        lines.append("overall: " + ("FAIL" if self.exit_code else "OK"))
        return "\n".join(lines) + "\n"


REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["run", "checks"],
    "additionalProperties": False,
    "properties": {
        "run": {
            "type": "object",
            "required": ["seed", "fields", "version"],
            "additionalProperties": False,
            "properties": {
                "seed": {"type": "integer"},
                "fields": {"type": "array", "items": {"type": "string"}},
                "version": {"type": "string"},
            },
        },
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "verdict", "anchor", "details", "ms"],
                "additionalProperties": False,
                "properties": {
                    "id": {"type": "string"},
                    "verdict": {"enum": list(VERDICTS)},
                    "anchor": {"type": "string"},
                    "details": {"type": "array", "items": {"type": "string"}},
                    "ms": {"type": "integer", "minimum": 0},
                },
            },
        },
    },
}
