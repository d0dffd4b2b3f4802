"""Runtime configuration shared by the CLI and the HTTP service.

Precedence: explicit overrides (CLI flags) > LEVEX_* environment variables
> JSON config file > defaults.
"""

from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping


@dataclass
class Config:
    listen: str = "127.0.0.1:8040"
    corpus_path: str | None = None
    session_dir: str = "levex-session"
    stoplist_path: str | None = None
    cloud_k: int = 50
    page_size: int = 20
    granularity: str = "year"
    expansion_cap: int = 1000
    ui_dir: str | None = None


_ENV_KEYS = {
    "listen": "LEVEX_LISTEN",
    "corpus_path": "LEVEX_CORPUS",
    "session_dir": "LEVEX_SESSION_DIR",
    "stoplist_path": "LEVEX_STOPLIST",
    "cloud_k": "LEVEX_CLOUD_K",
    "page_size": "LEVEX_PAGE_SIZE",
    "granularity": "LEVEX_GRANULARITY",
    "expansion_cap": "LEVEX_EXPANSION_CAP",
    "ui_dir": "LEVEX_UI_DIR",
}

_INT_FIELDS = {"cloud_k", "page_size", "expansion_cap"}


def load_config(
    path: str | Path | None = None,
    env: Mapping[str, str] | None = None,
    **overrides: Any,
) -> Config:
    env = os.environ if env is None else env
    values: dict[str, Any] = {}
    if path is not None:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
        known = {f.name for f in dataclasses.fields(Config)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        values.update(raw)
    for name, key in _ENV_KEYS.items():
        if key in env:
            values[name] = env[key]
    for name, value in overrides.items():
        if value is not None:
            values[name] = value
    for name in _INT_FIELDS:
        if name in values:
            values[name] = int(values[name])
    return Config(**values)


def split_listen(listen: str) -> tuple[str, int]:
    host, _, port = listen.rpartition(":")
    if not host or not port.isdigit():
        raise ValueError(f"listen address must be host:port, got {listen!r}")
    return host, int(port)
