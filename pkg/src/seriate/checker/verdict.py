"""Check verdicts and their canonical JSON report form."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Verdict:
    theorem: str
    semantics: str
    bounds: dict
    status: str  # "verified" | "refuted"
    instances: int
    counterexample: Optional[dict] = None
    # canonical reports carry 0 here so runs are byte-reproducible across
    # worker counts; measured wall time is diagnostic output only
    elapsed_ms: int = 0

    @property
    def verified(self) -> bool:
        return self.status == "verified"


def _canon(value):
    if isinstance(value, dict):
        return {k: _canon(value[k]) for k in sorted(value)}
    if isinstance(value, (list, tuple)):
        return [_canon(v) for v in value]
    if isinstance(value, frozenset):
        return sorted(_canon(v) for v in value)
    return value


def report_dict(v: Verdict) -> dict:
    return {
        "theorem": v.theorem,
        "semantics": v.semantics,
        "bounds": _canon(v.bounds),
        "status": v.status,
        "instances": v.instances,
        "counterexample": _canon(v.counterexample) if v.counterexample else None,
        "elapsed_ms": v.elapsed_ms,
    }


def report_json(verdicts) -> str:
    if isinstance(verdicts, Verdict):
        return json.dumps(report_dict(verdicts), indent=2)
    return json.dumps([report_dict(v) for v in verdicts], indent=2)
