"""Service configuration: one JSON file plus environment overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

_ENV_PREFIX = "GRANTREC_"


@dataclass
class ServiceConfig:
    root: str
    table: str
    stopwords: str | None = None
    lexicon: str | None = None
    score_overrides: str | None = None
    min_support: float = 0.05
    min_confidence: float = 0.5
    max_itemset_width: int = 3
    host: str = "127.0.0.1"
    port: int = 8765


_PATH_FIELDS = ("root", "table", "stopwords", "lexicon", "score_overrides")


def load_config(path: str | Path | None = None, env: dict | None = None) -> ServiceConfig:
    """Read the config file, then apply GRANTREC_<FIELD> overrides.

    Relative paths in the file are resolved against the file's directory.
    """
    env = os.environ if env is None else env
    values: dict = {}
    if path is None:
        path = env.get(_ENV_PREFIX + "CONFIG")
    if path:
        values.update(json.loads(Path(path).read_text("utf-8")))
        base = Path(path).resolve().parent
        for name in _PATH_FIELDS:
            if values.get(name):
                values[name] = str((base / values[name]).resolve())

    for field in fields(ServiceConfig):
        raw = env.get(_ENV_PREFIX + field.name.upper())
        if raw is None:
            continue
        if field.type in ("float",):
            values[field.name] = float(raw)
        elif field.type in ("int",):
            values[field.name] = int(raw)
        else:
            values[field.name] = raw

    unknown = set(values) - {f.name for f in fields(ServiceConfig)}
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    missing = {"root", "table"} - set(values)
    if missing:
        raise ValueError(f"missing config keys: {sorted(missing)}")
    return ServiceConfig(**values)
