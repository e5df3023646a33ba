from __future__ import annotations
import os
from dataclasses import dataclass, replace
from typing import Optional


def _env_flag(name: str, default: bool) -> bool:
    raw = os.environ.get(name)
    if raw is None:
        return default
    return raw.strip().lower() in ("1", "true", "yes", "on")


@dataclass(frozen=True)
class Settings:
    """
    Process-wide switches.

    Attributes:
    - check_lemmas (bool): Class solvers run their structural checks and raise on a violation.
    - check_invariants (bool): Every Instance re-validates symmetry and normalisation on construction.
    - strict_points (bool): Default occurrence semantics (injective on points within a variable).
    - jobs (int): Worker threads used for SAC probe rounds.
    """
    check_lemmas: bool = True
    check_invariants: bool = False
    strict_points: bool = False
    jobs: int = 1

    @classmethod
    def from_env(cls) -> Settings:
        jobs = os.environ.get("SACPAT_JOBS")
        return cls(
            check_lemmas=_env_flag("SACPAT_CHECK_LEMMAS", True),
            check_invariants=_env_flag("SACPAT_CHECK_INVARIANTS", False),
            strict_points=_env_flag("SACPAT_STRICT_POINTS", False),
            jobs=int(jobs) if jobs else 1,
        )


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(**overrides) -> Settings:
    """Replace the process-wide settings, keeping the fields not overridden."""
    global _settings
    settings = replace(get_settings(), **overrides)
    if settings.jobs < 1:
        raise ValueError("jobs must be at least 1, got {}".format(settings.jobs))
    _settings = settings
    return settings
