"""Append-only run records with a lossless textual encoding.

One record per line. Integers travel as decimal strings and rationals as
"p/q" strings so nothing is rounded on the way to disk; field order is
fixed so parse-then-serialize reproduces a line byte for byte.
"""

import json
import subprocess
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

SCHEMA_VERSION = 1

_FIELD_ORDER = ("schema_version", "command", "params", "seed", "started_at",
                "duration_ms", "results", "budget_flags", "code_revision",
                "rerun")


def encode_value(v):
    """Map a result value onto the JSON-safe textual form."""
    if isinstance(v, bool):
        return v
    if isinstance(v, Fraction):
        return f"{v.numerator}/{v.denominator}"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return v
    if v is None or isinstance(v, str):
        return v
    if isinstance(v, dict):
        return {str(k): encode_value(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, np.ndarray)):
        return [encode_value(x) for x in v]
    raise TypeError(f"cannot encode {type(v).__name__} into a record")


def decode_int(text):
    return int(text)


def decode_fraction(text):
    num, _, den = str(text).partition("/")
    return Fraction(int(num), int(den) if den else 1)


@dataclass(frozen=True)
class RunRecord:
    """One persisted command invocation."""

    schema_version: int
    command: str
    params: dict
    seed: int
    started_at: str
    duration_ms: int
    results: dict
    budget_flags: list = field(default_factory=list)
    code_revision: str = "unknown"
    rerun: bool = False

    def to_line(self):
        payload = {
            "schema_version": self.schema_version,
            "command": self.command,
            "params": encode_value(self.params),
            "seed": str(int(self.seed)),
            "started_at": self.started_at,
            "duration_ms": str(int(self.duration_ms)),
            "results": encode_value(self.results),
            "budget_flags": list(self.budget_flags),
            "code_revision": self.code_revision,
            "rerun": self.rerun,
        }
        return json.dumps(payload, separators=(",", ":"),
                          ensure_ascii=False) + "\n"

    def fingerprint(self):
        """Canonical bytes of the deterministic fields.

        Timestamps and the code revision are metadata; command, params,
        seed, results, and budget flags are what reproducibility promises.
        """
        payload = {
            "command": self.command,
            "params": encode_value(self.params),
            "seed": str(int(self.seed)),
            "results": encode_value(self.results),
            "budget_flags": list(self.budget_flags),
        }
        return json.dumps(payload, separators=(",", ":"),
                          ensure_ascii=False).encode()

    def dedup_key(self):
        return (self.command,
                json.dumps(encode_value(self.params), separators=(",", ":"),
                           sort_keys=True),
                str(int(self.seed)))


def record_from_line(line):
    """Parse one JSONL line back into a RunRecord.

    Payload dicts keep their decoded JSON form (strings for numbers), so
    to_line on the result reproduces the input bytes.
    """
    raw = json.loads(line)
    missing = [f for f in _FIELD_ORDER if f not in raw]
    if missing:
        raise ValueError(f"record is missing fields: {missing}")
    return RunRecord(
        schema_version=int(raw["schema_version"]),
        command=raw["command"],
        params=raw["params"],
        seed=int(raw["seed"]),
        started_at=raw["started_at"],
        duration_ms=int(raw["duration_ms"]),
        results=raw["results"],
        budget_flags=list(raw["budget_flags"]),
        code_revision=raw["code_revision"],
        rerun=bool(raw["rerun"]),
    )


def code_revision():
    """Git short hash of the working tree, or the package version."""
    here = Path(__file__).resolve().parent
    try:
        out = subprocess.run(
            ["git", "rev-parse", "--short", "HEAD"],
            cwd=here, capture_output=True, text=True, timeout=5)
        if out.returncode == 0 and out.stdout.strip():
            return out.stdout.strip()
    except OSError:
        pass
    try:
        from aplab import __version__
        return f"aplab-{__version__}"
    except ImportError:
        return "unknown"


class RecordWriter:
    """Serialized appends to one JSONL record file.

    The file is scanned once at open so duplicate (command, params, seed)
    submissions get the rerun flag; appends never rewrite earlier lines.
    """

    def __init__(self, path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._seen = set()
        if self.path.exists():
            with open(self.path, encoding="utf-8") as fh:
                for line in fh:
                    line = line.strip()
                    if line:
                        self._seen.add(record_from_line(line).dedup_key())

    def append(self, record):
        """Write the record, flagging it as a rerun when its key repeats."""
        key = record.dedup_key()
        with self._lock:
            if key in self._seen and not record.rerun:
                record = RunRecord(
                    schema_version=record.schema_version,
                    command=record.command,
                    params=record.params,
                    seed=record.seed,
                    started_at=record.started_at,
                    duration_ms=record.duration_ms,
                    results=record.results,
                    budget_flags=record.budget_flags,
                    code_revision=record.code_revision,
                    rerun=True,
                )
            with open(self.path, "a", encoding="utf-8") as fh:
                fh.write(record.to_line())
            self._seen.add(key)
        return record
