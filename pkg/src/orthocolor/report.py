"""The JSON report every CLI command writes to stdout."""

from __future__ import annotations

import json
from typing import Any

VERDICTS = ("ok", "refuted", "error")
EXIT_CODES = {"ok": 0, "refuted": 1, "error": 2}

REPORT_SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "orthocolor report",
    "type": "object",
    "required": ["command", "inputs", "verdict", "witnesses", "statistics", "seed"],
    "additionalProperties": False,
    "properties": {
        "command": {"type": "string"},
        "inputs": {"type": "object"},
        "verdict": {"enum": list(VERDICTS)},
        "witnesses": {"type": "object"},
        "statistics": {"type": "object"},
        "seed": {"type": ["integer", "null"]},
    },
}


def make_report(
    command: str,
    inputs: dict,
    verdict: str,
    witnesses: dict | None = None,
    statistics: dict | None = None,
    seed: int | None = None,
) -> dict:
    if verdict not in VERDICTS:
        raise ValueError(f"unknown verdict {verdict!r}")
    return {
        "command": command,
        "inputs": inputs,
        "verdict": verdict,
        "witnesses": witnesses or {},
        "statistics": statistics or {},
        "seed": seed,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
