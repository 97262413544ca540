"""Service configuration: file (TOML or JSON) plus HYPOTEST_* env overrides."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, fields
from pathlib import Path

try:
    import tomllib  # Python >= 3.11
except ModuleNotFoundError:  # pragma: no cover
    import tomli as tomllib  # type: ignore[no-redef]

__all__ = ["Config", "ConfigError", "load_config"]


class ConfigError(Exception):
    pass


@dataclass
class Config:
    listen: str = "127.0.0.1:8000"
    data_dir: Path = Path("data")
    lexicon: Path | None = None          # None -> bundled starter lexicon
    negation_words: Path | None = None   # None -> bundled list
    relation_verbs: Path | None = None   # None -> bundled list
    corpus: Path | None = None           # optional seed corpus, ingested at startup
    alpha: float = 0.05
    max_hops: int = 2
    static_dir: Path | None = None       # built web UI, served under /

    def validate(self) -> None:
        if not 0.0 < self.alpha < 1.0:
            raise ConfigError("alpha must lie in (0, 1)")
        if self.max_hops < 0:
            raise ConfigError("max_hops must be non-negative")
        for name in ("lexicon", "negation_words", "relation_verbs", "corpus"):
            path = getattr(self, name)
            if path is not None and not Path(path).exists():
                raise ConfigError(f"{name} path does not exist: {path}")

    def host_port(self) -> tuple[str, int]:
        host, _, port = self.listen.rpartition(":")
        if not host or not port.isdigit():
            raise ConfigError(f"listen must be host:port, got {self.listen!r}")
        return host, int(port)


_PATH_FIELDS = {"data_dir", "lexicon", "negation_words", "relation_verbs",
                "corpus", "static_dir"}
_ENV_PREFIX = "HYPOTEST_"


def _coerce(name: str, value, base: Config):
    if name in _PATH_FIELDS:
        return Path(value) if value is not None else None
    if name == "alpha":
        return float(value)
    if name == "max_hops":
        return int(value)
    if name == "listen":
        return str(value)
    raise ConfigError(f"unknown config key {name!r}")


def load_config(path: str | Path | None = None,
                env: dict[str, str] | None = None) -> Config:
    """Build a Config from an optional file and HYPOTEST_* env overrides.

    The file format follows its suffix: .toml or .json. Env vars use
    upper-cased field names (HYPOTEST_DATA_DIR, HYPOTEST_ALPHA, ...) and
    win over file values.
    """
    config = Config()
    known = {f.name for f in fields(Config)}
    if path is not None:
        path = Path(path)
        if not path.exists():
            raise ConfigError(f"config file not found: {path}")
        if path.suffix == ".toml":
            with path.open("rb") as fh:
                data = tomllib.load(fh)
        elif path.suffix == ".json":
            data = json.loads(path.read_text(encoding="utf-8"))
        else:
            raise ConfigError(f"config must be .toml or .json, got {path.suffix!r}")
        if not isinstance(data, dict):
            raise ConfigError("config root must be a table/object")
        for key, value in data.items():
            if key not in known:
                raise ConfigError(f"unknown config key {key!r}")
            setattr(config, key, _coerce(key, value, config))
    env = dict(os.environ if env is None else env)
    for name in known:
        env_key = _ENV_PREFIX + name.upper()
        if env_key in env:
            setattr(config, name, _coerce(name, env[env_key], config))
    config.validate()
    return config
