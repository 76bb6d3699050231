"""Deterministic JSON/CSV report writing."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["ScanReport", "dumps", "write_csv"]


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


@dataclass
class ScanReport:
    command: str
    spec: dict | None
    parameters: dict
    result: dict
    outcomes: list = field(default_factory=list)
    summary: dict = field(default_factory=dict)
    wall_time: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "command": self.command,
            "spec": self.spec,
            "parameters": self.parameters,
            "result": self.result,
            "outcomes": self.outcomes,
            "summary": self.summary,
        }
        # wall time would break byte-identical reruns, so it is opt-in
        if timing:
            out["meta"] = {"wall_time_s": round(self.wall_time, 3)}
        return out

    def to_json(self, timing: bool = False) -> str:
        return dumps(self.to_dict(timing))

    def write(self, path, timing: bool = False) -> None:
        Path(path).write_text(self.to_json(timing), encoding="utf-8")


def write_csv(path, rows: list[dict], columns: list[str]) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, extrasaction="ignore")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(row.get(k)) for k in columns})


def _cell(v):
    if isinstance(v, (list, tuple)):
        return " ".join(map(str, v))
    return "" if v is None else v
