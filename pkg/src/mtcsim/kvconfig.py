"""Flat ``key = value`` configuration files.

The on-disk format used for parameter sets, experiment configs and run
manifests:

* one ``key = value`` pair per line, keys may be dotted (``material.ms``)
  but the namespace is flat (no sections, no nesting);
* ``#`` starts a comment (full line or trailing);
* blank lines ignored;
* every file carries ``schema = 1`` so format drift fails loudly;
* all physical quantities are SI.

Loading is strict: a schema mismatch, a duplicate key, or (when a key set
is given) an unknown/missing key raises ``ConfigError`` before any
computation starts.  Keys under the reserved ``run.`` prefix are manifest
metadata and are always tolerated, which lets a manifest be fed back in as
a config file for exact reruns.
"""

from __future__ import annotations

import math
from pathlib import Path

SCHEMA_VERSION = 1
MANIFEST_PREFIX = "run."


class ConfigError(ValueError):
    """Raised for malformed, unknown or missing configuration keys."""


def parse_kv_text(text: str, source: str = "<string>") -> dict[str, str]:
    """Parse flat key-value text into an ordered dict of raw strings."""
    out: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{source}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key:
            raise ConfigError(f"{source}:{lineno}: empty key")
        if key in out:
            raise ConfigError(f"{source}:{lineno}: duplicate key {key!r}")
        out[key] = value
    return out


def load_kv_file(path: str | Path) -> dict[str, str]:
    """Read a flat key-value file and check its schema version."""
    path = Path(path)
    pairs = parse_kv_text(path.read_text(encoding="utf-8"), source=str(path))
    schema = pairs.pop("schema", None)
    if schema is None:
        raise ConfigError(f"{path}: missing required 'schema' key")
    if schema.strip() != str(SCHEMA_VERSION):
        raise ConfigError(f"{path}: unsupported schema {schema!r} (expected {SCHEMA_VERSION})")
    return pairs


def check_keys(pairs: dict[str, str], known: set[str], required: set[str], source: str) -> None:
    """Strict key validation; ``run.*`` manifest keys are ignored."""
    real = {k for k in pairs if not k.startswith(MANIFEST_PREFIX)}
    unknown = sorted(real - known)
    if unknown:
        raise ConfigError(f"{source}: unknown keys: {', '.join(unknown)}")
    missing = sorted(required - real)
    if missing:
        raise ConfigError(f"{source}: missing required keys: {', '.join(missing)}")


def as_float(pairs: dict[str, str], key: str, source: str = "config") -> float:
    try:
        value = float(pairs[key])
    except KeyError:
        raise ConfigError(f"{source}: missing required key {key!r}") from None
    except ValueError:
        raise ConfigError(f"{source}: key {key!r}: not a number: {pairs[key]!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"{source}: key {key!r}: non-finite value")
    return value


def as_int(pairs: dict[str, str], key: str, source: str = "config") -> int:
    try:
        return int(pairs[key], 0)
    except KeyError:
        raise ConfigError(f"{source}: missing required key {key!r}") from None
    except ValueError:
        raise ConfigError(f"{source}: key {key!r}: not an integer: {pairs[key]!r}") from None


def as_str(pairs: dict[str, str], key: str, source: str = "config") -> str:
    try:
        return pairs[key]
    except KeyError:
        raise ConfigError(f"{source}: missing required key {key!r}") from None


def as_float_list(pairs: dict[str, str], key: str, source: str = "config") -> list[float]:
    """Comma-separated list of numbers."""
    raw = as_str(pairs, key, source)
    try:
        return [float(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError:
        raise ConfigError(f"{source}: key {key!r}: bad number list: {raw!r}") from None


def format_kv(pairs: dict[str, object]) -> str:
    """Render pairs back to flat key-value text (schema line first)."""
    lines = [f"schema = {SCHEMA_VERSION}"]
    for key, value in pairs.items():
        if isinstance(value, float):
            lines.append(f"{key} = {value!r}")
        else:
            lines.append(f"{key} = {value}")
    return "\n".join(lines) + "\n"
