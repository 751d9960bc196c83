"""Append-only on-disk cache with per-record checksums.

One JSONL file per (kind, type, rank); every line carries the canonical
key, the payload, and a sha256 checksum of both.  Corrupt or truncated
records are skipped on load (forcing recomputation), and later records
win over earlier ones for the same key, so appending is always safe.
"""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

ENV_VAR = "ALCOVE_KL_CACHE"


def cache_dir(explicit: str | None = None) -> Path:
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "alcove-kl"


def _digest(key: str, payload) -> str:
    body = json.dumps([key, payload], sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(body.encode()).hexdigest()


class RecordCache:
    """A checksummed key -> JSON-payload store backed by one JSONL file."""

    def __init__(self, directory: Path, name: str):
        self.path = Path(directory) / f"{name}.jsonl"
        self._records: dict[str, object] = {}
        self._load()

    def _load(self) -> None:
        if not self.path.exists():
            return
        with open(self.path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = json.loads(line)
                    key, payload, sha = rec["key"], rec["payload"], rec["sha"]
                except (json.JSONDecodeError, KeyError, TypeError):
                    continue  # corrupt record: recompute later
                if _digest(key, payload) != sha:
                    continue
                self._records[key] = payload

    def get(self, key: str):
        return self._records.get(key)

    def __contains__(self, key: str) -> bool:
        return key in self._records

    def put(self, key: str, payload) -> None:
        self._records[key] = payload
        self.path.parent.mkdir(parents=True, exist_ok=True)
        rec = {"key": key, "payload": payload, "sha": _digest(key, payload)}
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(rec, sort_keys=True, separators=(",", ":")) + "\n")

    def __len__(self) -> int:
        return len(self._records)
