"""Bound reports and their CSV/JSON serialization.

A report captures one inequality instance: left side, constant-free
right side, the constant applied (or "empirical"), the implied constant
``lhs / rhs_core`` and, when a numeric constant is supplied, a pass flag.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

__all__ = [
    "BoundReport",
    "make_report",
    "reports_to_csv",
    "reports_to_json",
    "reports_from_json",
]

CSV_TAIL = ["lhs", "rhs_core", "constant_used", "ratio", "satisfied"]


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: dict
    lhs: float
    rhs_core: float
    constant_used: float | str
    satisfied: bool | None
    ratio: float = field(init=False)

    def __post_init__(self):
        if self.lhs < 0 or self.rhs_core < 0:
            raise ValueError("lhs and rhs_core must be non-negative")
        if self.rhs_core > 0:
            ratio = self.lhs / self.rhs_core
        else:
            ratio = 0.0 if self.lhs == 0 else math.inf
        object.__setattr__(self, "ratio", ratio)


def make_report(
    name: str,
    params: dict,
    lhs: float,
    rhs_core: float,
    constant: float | None = None,
    slack: float = 0.0,
) -> BoundReport:
    """Build a report; with a numeric constant the pass flag is
    ``lhs <= constant * rhs_core * (1 + slack)``."""
    if constant is None:
        return BoundReport(name, dict(params), float(lhs), float(rhs_core), "empirical", None)
    satisfied = float(lhs) <= constant * float(rhs_core) * (1.0 + slack)
    return BoundReport(name, dict(params), float(lhs), float(rhs_core), float(constant), satisfied)


def _fmt(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if value is None:
        return ""
    return str(value)


def reports_to_csv(reports: Iterable[BoundReport], path: str | Path) -> None:
    """Write reports with a stable column order: name, sorted param keys, then
    lhs, rhs_core, constant_used, ratio, satisfied."""
    reports = list(reports)
    keys = sorted({k for r in reports for k in r.params})
    lines = [",".join(["name"] + keys + CSV_TAIL)]
    for r in reports:
        row = [r.name]
        row += [_fmt(r.params.get(k)) for k in keys]
        row += [_fmt(r.lhs), _fmt(r.rhs_core), _fmt(r.constant_used), _fmt(r.ratio), _fmt(r.satisfied)]
        lines.append(",".join(row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def reports_to_json(reports: Iterable[BoundReport], path: str | Path) -> None:
    """Write reports as a JSON array, one object per report."""
    payload = []
    for r in reports:
        payload.append(
            {
                "name": r.name,
                "params": r.params,
                "lhs": r.lhs,
                "rhs_core": r.rhs_core,
                "constant_used": r.constant_used,
                "ratio": None if math.isinf(r.ratio) else r.ratio,
                "satisfied": r.satisfied,
            }
        )
    Path(path).write_text(json.dumps(payload, indent=1, sort_keys=True), encoding="utf-8")


def reports_from_json(path: str | Path) -> list[BoundReport]:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    out = []
    for obj in raw:
        constant = obj["constant_used"]
        out.append(
            BoundReport(
                name=obj["name"],
                params=obj["params"],
                lhs=obj["lhs"],
                rhs_core=obj["rhs_core"],
                constant_used=constant,
                satisfied=obj["satisfied"],
            )
        )
    return out
