"""Flat ``key = value`` configuration files for the command line."""
from __future__ import annotations

from pathlib import Path

from .ffield import DEFAULT_FIELD_CEILING
from .harness import BOX_CEILING, SCHMIDT_CEILING, SPARSE_CEILING

DEFAULTS = {
    "workers": 1,
    "max_evals": SPARSE_CEILING,
    "box_ceiling": BOX_CEILING,
    "schmidt_ceiling": SCHMIDT_CEILING,
    "field_ceiling": DEFAULT_FIELD_CEILING,
}


class ConfigError(ValueError):
    pass


def load_config(path: str | Path) -> dict:
    """Read overrides for :data:`DEFAULTS`; ``#`` starts a comment.

    Unknown keys and non-integer values are rejected.
    """
    out = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in DEFAULTS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r} (known: {', '.join(sorted(DEFAULTS))})")
        try:
            out[key] = int(value)
        except ValueError:
            raise ConfigError(f"{path}:{lineno}: {key} must be an integer, got {value!r}") from None
        if out[key] < 1:
            raise ConfigError(f"{path}:{lineno}: {key} must be positive")
    return out


def effective_config(config_path: str | None, overrides: dict) -> dict:
    """Built-in defaults, then the config file, then explicit flags."""
    cfg = dict(DEFAULTS)
    if config_path:
        cfg.update(load_config(config_path))
    cfg.update({k: v for k, v in overrides.items() if v is not None})
    return cfg
