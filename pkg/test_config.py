#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Tests for configuration loading
"""

import json

from config import DEFAULT_CONFIG, ConfigManager


def test_missing_file_gives_defaults(tmp_path):
    manager = ConfigManager(tmp_path / "none.json")
    assert manager.load_config() == DEFAULT_CONFIG
    assert not (tmp_path / "none.json").exists()


def test_file_values_merge_over_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"sequence": {"window": 3}}), encoding="utf-8")
    manager = ConfigManager(path)
    manager.load_config()
    assert manager.get_value("sequence.window") == 3
    assert manager.get_value("sequence.prefix") == 8
    assert manager.get_value("sequence.missing", "fallback") == "fallback"


def test_broken_file_falls_back_to_defaults(tmp_path):
    path = tmp_path / "config.json"
    path.write_text("{not json", encoding="utf-8")
    manager = ConfigManager(path)
    assert manager.load_config() == DEFAULT_CONFIG


def test_set_and_save(tmp_path):
    path = tmp_path / "config.json"
    manager = ConfigManager(path)
    manager.load_config()
    manager.set_value("verify.seed", 7)
    assert manager.update_config({"output": {"format": "text"}}, save=True)
    reloaded = ConfigManager(path)
    reloaded.load_config()
    assert reloaded.get_value("verify.seed") == 7
    assert reloaded.get_value("output.format") == "text"


def test_thread_count_precedence(tmp_path, monkeypatch):
    manager = ConfigManager(tmp_path / "none.json")
    manager.load_config()
    monkeypatch.setenv("LCTPOLY_THREADS", "3")
    assert manager.verify_threads(5) == 5
    assert manager.verify_threads() == 3
    monkeypatch.setenv("LCTPOLY_THREADS", "many")
    manager.set_value("verify.threads", 2)
    assert manager.verify_threads() == 2
