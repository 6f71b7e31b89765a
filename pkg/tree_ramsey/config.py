#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Runtime settings: enumeration cap, search budgets, worker hint and seeds.

Settings come from a JSON file found through the usual lookup chain and can be
overridden by environment variables and command-line flags.
"""

import json
import logging
import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

logger = logging.getLogger(__name__)

CONFIG_ENV_VAR = "TREE_RAMSEY_CONFIG"
CAP_ENV_VAR = "TREE_RAMSEY_CAP"
CONFIG_FILENAME = "config.json"

DEFAULT_ENUMERATION_CAP = 2 ** 26


@dataclass(frozen=True)
class Settings:
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP
    node_budget: Optional[int] = 2_000_000
    time_budget: Optional[float] = None
    workers: int = 1
    mc_samples: int = 100_000
    seed: int = 0

    def __post_init__(self):
        if self.enumeration_cap < 1:
            raise ValueError("enumeration_cap must be positive")
        if self.node_budget is not None and self.node_budget < 1:
            raise ValueError("node_budget must be positive")
        if self.time_budget is not None and self.time_budget <= 0:
            raise ValueError("time_budget must be positive")
        if self.workers < 1:
            raise ValueError("workers must be positive")

    def with_overrides(self, **overrides: Any) -> "Settings":
        """Return a copy with every non-None override applied."""
        return replace(self, **{k: v for k, v in overrides.items() if v is not None})


def find_config_file(config_path: Optional[str] = None) -> Optional[str]:
    """Locate the config file: env var, explicit path, cwd, package dir, home dir."""
    env_config_path = os.environ.get(CONFIG_ENV_VAR)
    if env_config_path and os.path.isfile(env_config_path):
        logger.debug(f"Using config file from environment variable: {env_config_path}")
        return env_config_path

    if config_path:
        if os.path.isfile(config_path):
            logger.debug(f"Using config file from explicit path: {config_path}")
            return config_path
        raise FileNotFoundError(f"Config file not found: {config_path}")

    if os.path.isfile(CONFIG_FILENAME):
        logger.debug("Using config file from current directory")
        return CONFIG_FILENAME

    package_config = os.path.join(os.path.dirname(os.path.abspath(__file__)), CONFIG_FILENAME)
    if os.path.isfile(package_config):
        logger.debug(f"Using config file from package directory: {package_config}")
        return package_config

    home_config = os.path.join(os.path.expanduser("~"), ".tree_ramsey", CONFIG_FILENAME)
    if os.path.isfile(home_config):
        logger.debug(f"Using config file from home directory: {home_config}")
        return home_config

    return None


def _read_config(config_file: str) -> Dict[str, Any]:
    try:
        with open(config_file, "r", encoding="utf-8") as f:
            raw = json.load(f)
    except Exception as e:
        logger.error(f"Failed to load config from {config_file}: {e}")
        raise
    known = {f.name for f in fields(Settings)}
    unknown = sorted(set(raw) - known)
    if unknown:
        logger.warning(f"Ignoring unknown config keys in {config_file}: {', '.join(unknown)}")
    return {k: v for k, v in raw.items() if k in known}


def load_settings(config_path: Optional[str] = None) -> Settings:
    """Build Settings from the config file (if any) and the cap env var."""
    values: Dict[str, Any] = {}
    config_file = find_config_file(config_path)
    if config_file:
        values.update(_read_config(config_file))
        logger.debug(f"Successfully loaded config from {config_file}")

    cap = os.environ.get(CAP_ENV_VAR)
    if cap:
        try:
            values["enumeration_cap"] = int(cap)
        except ValueError:
            raise ValueError(f"{CAP_ENV_VAR} must be an integer, got {cap!r}")
        logger.debug(f"Enumeration cap overridden by {CAP_ENV_VAR}={cap}")

    return Settings(**values)


_active_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Return the active settings, loading them on first use."""
    global _active_settings
    if _active_settings is None:
        _active_settings = load_settings()
    return _active_settings


def set_settings(settings: Optional[Settings]) -> None:
    """Install settings globally; None forces a reload on next access."""
    global _active_settings
    _active_settings = settings


def enumeration_cap() -> int:
    return get_settings().enumeration_cap
