"""Run configuration: plain-text `key = value` files with comma lists.

Every CLI flag overrides its config key. snr_db accepts `none` (or
`noiseless`) entries for the exact-delivery channel bypass.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Optional, Union


def _parse_bool(s: str) -> bool:
    return s.strip().lower() in ("1", "true", "yes", "on")


def _parse_snr(s: str) -> Optional[float]:
    s = s.strip().lower()
    if s in ("none", "noiseless", "inf"):
        return None
    return float(s)


@dataclass(frozen=True)
class RunConfig:
    corpus: Optional[str] = None      # None -> bundled sample corpus
    dictionary: Optional[str] = None  # None -> bundled dictionary
    alpha: float = 3.0
    beta: float = 2.0
    gamma: float = 1.0
    delta: float = 2.0
    window_len: int = 40
    num_filters: tuple[int, ...] = (64,)
    keep_ratio: tuple[float, ...] = (0.9,)
    snr_db: tuple[Optional[float], ...] = (None,)
    seed: int = 1
    trials: int = 500
    backend: str = "deterministic"
    llm_url: Optional[str] = None
    llm_model: str = "gpt-3.5-turbo"
    llm_token_env: str = "PUNCTEXT_LLM_TOKEN"
    embed_url: Optional[str] = None
    output: str = "results/run"
    workers: int = 1
    max_retries: int = 2
    max_concurrency: int = 4

    def __post_init__(self):
        if not self.num_filters or not self.keep_ratio or not self.snr_db:
            raise ValueError("sweep lists must be non-empty")
        for r in self.keep_ratio:
            if not 0 < r <= 1:
                raise ValueError(f"keep_ratio {r} outside (0, 1]")
        for m in self.num_filters:
            if m < 1 or m & (m - 1):
                raise ValueError(f"num_filters {m} is not a power of two")
        if self.window_len < 1:
            raise ValueError("window_len must be at least 1")
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.backend not in ("deterministic", "llm"):
            raise ValueError(f"unknown backend {self.backend!r}")

    def resolved_llm_url(self) -> Optional[str]:
        return self.llm_url or os.environ.get("PUNCTEXT_LLM_URL")

    def resolved_embed_url(self) -> Optional[str]:
        return self.embed_url or os.environ.get("PUNCTEXT_EMBED_URL")


_LIST_FIELDS = {
    "num_filters": int,
    "keep_ratio": float,
    "snr_db": _parse_snr,
}
_SCALAR_FIELDS = {
    "corpus": str, "dictionary": str, "alpha": float, "beta": float,
    "gamma": float, "delta": float, "window_len": int, "seed": int,
    "trials": int, "backend": str, "llm_url": str, "llm_model": str,
    "llm_token_env": str, "embed_url": str, "output": str, "workers": int,
    "max_retries": int, "max_concurrency": int,
}


def parse_config_text(text: str) -> dict[str, str]:
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected `key = value`")
        key, value = line.split("=", 1)
        raw[key.strip()] = value.strip()
    return raw


def config_from_mapping(raw: dict[str, str],
                        base: Optional[RunConfig] = None) -> RunConfig:
    base = base or RunConfig()
    updates = {}
    known = {f.name for f in fields(RunConfig)}
    for key, value in raw.items():
        if key not in known:
            raise ValueError(f"unknown configuration key {key!r}")
        if key in _LIST_FIELDS:
            conv = _LIST_FIELDS[key]
            updates[key] = tuple(conv(part) for part in value.split(","))
        else:
            updates[key] = _SCALAR_FIELDS[key](value)
    return replace(base, **updates)


def load_config(path: Union[str, Path],
                base: Optional[RunConfig] = None) -> RunConfig:
    return config_from_mapping(
        parse_config_text(Path(path).read_text(encoding="utf-8")), base)
