#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Tests for config file lookup and settings overrides.
"""

import json
import os

import pytest

from tree_ramsey import config
from tree_ramsey.config import (CAP_ENV_VAR, CONFIG_ENV_VAR, Settings, enumeration_cap,
                                find_config_file, get_settings, load_settings, set_settings)

TEST_CONFIG = os.path.join(os.path.dirname(os.path.abspath(__file__)), "test_config.json")


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    yield
    set_settings(None)


def test_load_explicit_config():
    settings = load_settings(TEST_CONFIG)
    assert settings.node_budget == 50000
    assert settings.workers == 2
    assert settings.seed == 11
    assert settings.time_budget == 30


def test_environment_config_wins(monkeypatch, tmp_path):
    other = tmp_path / "other.json"
    other.write_text(json.dumps({"seed": 5}), encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV_VAR, TEST_CONFIG)
    assert find_config_file(str(other)) == TEST_CONFIG
    assert load_settings(str(other)).seed == 11


def test_missing_explicit_config():
    with pytest.raises(FileNotFoundError):
        find_config_file("/nonexistent/tree_ramsey.json")


def test_cwd_config(monkeypatch, tmp_path):
    (tmp_path / "config.json").write_text(json.dumps({"mc_samples": 77}), encoding="utf-8")
    monkeypatch.chdir(tmp_path)
    assert find_config_file() == "config.json"
    assert load_settings().mc_samples == 77


def test_cap_environment_override(monkeypatch):
    monkeypatch.setenv(CAP_ENV_VAR, "1234")
    assert load_settings(TEST_CONFIG).enumeration_cap == 1234
    monkeypatch.setenv(CAP_ENV_VAR, "lots")
    with pytest.raises(ValueError):
        load_settings(TEST_CONFIG)


def test_unknown_keys_are_ignored(tmp_path, caplog):
    path = tmp_path / "extra.json"
    path.write_text(json.dumps({"seed": 3, "api_url": "x"}), encoding="utf-8")
    settings = load_settings(str(path))
    assert settings.seed == 3
    assert "api_url" in caplog.text


def test_overrides_skip_none():
    base = Settings(seed=4, workers=3)
    assert base.with_overrides(seed=None, workers=1) == Settings(seed=4, workers=1)


def test_invalid_values_rejected():
    with pytest.raises(ValueError):
        Settings(workers=0)
    with pytest.raises(ValueError):
        Settings(enumeration_cap=0)


def test_active_settings():
    set_settings(Settings(enumeration_cap=99))
    assert get_settings().enumeration_cap == 99
    assert enumeration_cap() == 99
    set_settings(None)
    assert config._active_settings is None
