"""Configuration management for fockcalc."""

import logging
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from dotenv import dotenv_values

from .errors import ConfigError

logger = logging.getLogger(__name__)

SUITE_SIZES = ("small", "default")
OUTPUT_FORMATS = ("json", "text")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


@dataclass
class Config:
    """Settings shared by the CLI commands and the suite runner."""

    # Evaluation
    window_radius: int  # default z-window is [-radius, radius] when --window is absent

    # Identity suites
    suite_size: str  # small or default
    suite_workers: int  # concurrent suite cases
    random_seed: int  # seeds the randomized gl_n cases

    # Output
    output_format: str  # json or text
    log_level: str
    log_file: Optional[str]

    @classmethod
    def defaults(cls) -> "Config":
        return cls.from_mapping({})

    @classmethod
    def from_file(cls, path: Optional[str] = None) -> "Config":
        """Load configuration from a dotenv-format file.

        The process environment is not consulted; keys missing from the
        file keep their defaults.
        """
        if not path:
            return cls.defaults()
        values = dotenv_values(path)
        logger.debug(f"Loaded {len(values)} keys from {path}")
        return cls.from_mapping(values)

    @classmethod
    def from_mapping(cls, values: Mapping[str, Optional[str]]) -> "Config":
        def get_optional(key: str, default: str) -> str:
            value = values.get(key)
            return default if value is None or value == "" else value.strip()

        def get_int(key: str, default: str, minimum: Optional[int] = None) -> int:
            raw = get_optional(key, default)
            try:
                val = int(raw)
            except ValueError:
                raise ConfigError(f"Invalid value for {key}: '{raw}'. Must be an integer.") from None
            if minimum is not None and val < minimum:
                raise ConfigError(f"{key} must be at least {minimum}, got {val}")
            return val

        def get_choice(key: str, default: str, choices) -> str:
            raw = get_optional(key, default)
            val = raw.upper() if choices is LOG_LEVELS else raw.lower()
            if val not in choices:
                raise ConfigError(
                    f"Invalid value for {key}: '{raw}'. Must be one of {', '.join(choices)}."
                )
            return val

        return cls(
            window_radius=get_int("WINDOW_RADIUS", "4", minimum=0),
            suite_size=get_choice("SUITE_SIZE", "default", SUITE_SIZES),
            suite_workers=get_parallel_setting("SUITE_WORKERS", get_optional("SUITE_WORKERS", "1")),
            random_seed=get_int("RANDOM_SEED", "20240"),
            output_format=get_choice("OUTPUT_FORMAT", "json", OUTPUT_FORMATS),
            log_level=get_choice("LOG_LEVEL", "WARNING", LOG_LEVELS),
            log_file=values.get("LOG_FILE") or None,
        )

    def with_overrides(self, **overrides) -> "Config":
        """A copy with every non-None override applied (CLI flags win over the file)."""
        changes = {k: v for k, v in overrides.items() if v is not None}
        if "suite_workers" in changes:
            changes["suite_workers"] = get_parallel_setting("--workers", str(changes["suite_workers"]))
        if "window_radius" in changes and changes["window_radius"] < 0:
            raise ConfigError(f"window radius must be at least 0, got {changes['window_radius']}")
        return replace(self, **changes)


def get_parallel_setting(key: str, val_str: str) -> int:
    """Parse and validate a worker count."""
    try:
        val = int(val_str)
    except (ValueError, TypeError):
        raise ConfigError(
            f"Invalid value for {key}: '{val_str}'. Must be a positive integer (1-32 recommended)."
        ) from None
    if val < 1:
        raise ConfigError(f"{key} must be at least 1, got {val}")
    if val > 32:
        logger.warning(
            f"{key} is set to {val}, which is very high. "
            f"Suite cases are CPU bound; more workers than cores will not help."
        )
    return val
