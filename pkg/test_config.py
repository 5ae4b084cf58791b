#!/usr/bin/env python3
"""Tests for configuration loading and validation."""

import logging

import pytest

from fockcalc.config import Config, get_parallel_setting
from fockcalc.errors import ConfigError


def write_env(tmp_path, text):
    path = tmp_path / "fockcalc.env"
    path.write_text(text)
    return str(path)


def test_defaults():
    config = Config.defaults()
    assert config.window_radius == 4
    assert config.suite_size == "default"
    assert config.suite_workers == 1
    assert config.random_seed == 20240
    assert config.output_format == "json"
    assert config.log_level == "WARNING"
    assert config.log_file is None
    assert Config.from_file(None) == config


def test_from_file(tmp_path):
    path = write_env(tmp_path, "\n".join([
        "# identity suites",
        "WINDOW_RADIUS=6",
        "SUITE_SIZE=small",
        "SUITE_WORKERS=4",
        "OUTPUT_FORMAT=TEXT",
        "LOG_LEVEL=debug",
        "LOG_FILE=run.log",
    ]))
    config = Config.from_file(path)
    assert config.window_radius == 6
    assert config.suite_size == "small"
    assert config.suite_workers == 4
    assert config.output_format == "text"
    assert config.log_level == "DEBUG"
    assert config.log_file == "run.log"
    # keys missing from the file keep their defaults
    assert config.random_seed == 20240


def test_process_environment_is_ignored(tmp_path, monkeypatch):
    monkeypatch.setenv("WINDOW_RADIUS", "9")
    config = Config.from_file(write_env(tmp_path, "SUITE_SIZE=small\n"))
    assert config.window_radius == 4


@pytest.mark.parametrize("line", [
    "WINDOW_RADIUS=abc",
    "WINDOW_RADIUS=-1",
    "SUITE_SIZE=huge",
    "SUITE_WORKERS=0",
    "SUITE_WORKERS=many",
    "OUTPUT_FORMAT=xml",
    "LOG_LEVEL=LOUD",
    "RANDOM_SEED=1.5",
])
def test_invalid_values(tmp_path, line):
    with pytest.raises(ConfigError):
        Config.from_file(write_env(tmp_path, line + "\n"))


def test_overrides():
    config = Config.defaults().with_overrides(output_format="text", log_level=None, suite_workers=3)
    assert config.output_format == "text"
    assert config.log_level == "WARNING"
    assert config.suite_workers == 3
    with pytest.raises(ConfigError):
        Config.defaults().with_overrides(suite_workers=0)
    with pytest.raises(ConfigError):
        Config.defaults().with_overrides(window_radius=-2)


def test_parallel_setting(caplog):
    assert get_parallel_setting("SUITE_WORKERS", "8") == 8
    with caplog.at_level(logging.WARNING, logger="fockcalc.config"):
        assert get_parallel_setting("SUITE_WORKERS", "64") == 64
    assert "very high" in caplog.text
    with pytest.raises(ConfigError):
        get_parallel_setting("SUITE_WORKERS", "-1")
