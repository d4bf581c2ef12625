"""Runtime caps and parallelism.

Values come from the environment (``KF_MAX_WEIGHT``, ``KF_THREADS``) and can be
overridden by CLI flags, which always win.
"""

from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"environment variable {name} must be an integer, got {raw!r}") from None
    if value <= 0:
        raise ValueError(f"environment variable {name} must be positive, got {value}")
    return value


@dataclass
class Config:
    max_weight: int = 24
    threads: int = 1
    plethysm_cap: int = 14
    poly_term_cap: int = 20000
    direct_block_cap: int = 16

    @classmethod
    def from_env(cls) -> "Config":
        return cls(
            max_weight=_env_int("KF_MAX_WEIGHT", 24),
            threads=_env_int("KF_THREADS", 1),
        )


config = Config.from_env()
