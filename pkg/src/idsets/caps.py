"""Brute-force budgets, overridable via environment variables or CLI flags."""

from __future__ import annotations

import os
from dataclasses import dataclass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return int(raw)


@dataclass(frozen=True)
class Caps:
    """Resource limits for the enumeration-based solvers.

    max_paths      limit on enumerated simple s-t paths
    max_subsets    limit on states visited by subset searches
    max_ground     ground-set size limit for 2^|E| subset loops
    max_fm_vars    variable limit for Fourier-Motzkin elimination
    """

    max_paths: int = 100_000
    max_subsets: int = 2**24
    max_ground: int = 20
    max_fm_vars: int = 6

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            max_paths=_env_int("IDSETS_MAX_PATHS", cls.max_paths),
            max_subsets=_env_int("IDSETS_MAX_SUBSETS", cls.max_subsets),
            max_ground=_env_int("IDSETS_MAX_GROUND", cls.max_ground),
            max_fm_vars=_env_int("IDSETS_MAX_FM_VARS", cls.max_fm_vars),
        )


DEFAULT_CAPS = Caps()
