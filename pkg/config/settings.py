#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configuration Management Module

Responsible for loading, saving, and managing the toolkit configuration.
"""

import copy
import json
import logging
import os
from pathlib import Path
from typing import Any, Dict, Optional

from .paths import setup_project_paths

logger = logging.getLogger(__name__)

# Setup project paths
paths = setup_project_paths()

DEFAULT_CONFIG: Dict[str, Any] = {
    "sequence": {
        "window": 5,
        "prefix": 8
    },
    "verify": {
        "seed": 0,
        "count": 50,
        "threads": None,
        "progress": False
    },
    "output": {
        "format": "json",  # json, text
        "approx_digits": 6
    },
    "logging": {
        "level": "WARNING",
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        "file": None
    }
}


class ConfigManager:
    """Configuration Manager Class"""

    def __init__(self, config_path=None):
        """Initialize configuration manager

        Args:
            config_path (str, optional): Configuration file path.
                                       If None, uses LCTPOLY_CONFIG or the project config.
        """
        if config_path is None:
            self.config_path = paths.get_config_file()
        else:
            self.config_path = Path(config_path)
        self.default_config = copy.deepcopy(DEFAULT_CONFIG)
        self.config = copy.deepcopy(DEFAULT_CONFIG)

    def load_config(self):
        """Load configuration file

        Values from the file are merged over the defaults. A missing file
        leaves the defaults in place; nothing is written.

        Returns:
            dict: Configuration dictionary
        """
        self.config = copy.deepcopy(self.default_config)
        try:
            if os.path.exists(self.config_path):
                with open(self.config_path, 'r', encoding='utf-8') as f:
                    self._update_dict(self.config, json.load(f))
                logger.info(f"Configuration file loaded: {self.config_path}")
            else:
                logger.debug(f"No configuration file at {self.config_path}, using defaults")
        except (OSError, json.JSONDecodeError) as e:
            logger.error(f"Failed to load configuration file: {e}")
            self.config = copy.deepcopy(self.default_config)

        return self.config

    def save_config(self):
        """Save configuration to file"""
        try:
            with open(self.config_path, 'w', encoding='utf-8') as f:
                json.dump(self.config, f, indent=4, ensure_ascii=False)
            logger.info(f"Configuration file saved: {self.config_path}")
            return True
        except OSError as e:
            logger.error(f"Failed to save configuration file: {e}")
            return False

    def update_config(self, new_config, save=False):
        """Update configuration

        Args:
            new_config (dict): New configuration dictionary
            save (bool): Write the result back to the file

        Returns:
            bool: Whether the update was successful
        """
        self._update_dict(self.config, new_config)
        return self.save_config() if save else True

    def _update_dict(self, d, u):
        """Recursively update dictionary

        Args:
            d (dict): Target dictionary
            u (dict): Update dictionary
        """
        for k, v in u.items():
            if isinstance(v, dict) and k in d and isinstance(d[k], dict):
                self._update_dict(d[k], v)
            else:
                d[k] = v

    def get_value(self, key_path, default=None):
        """Get a configuration value

        Args:
            key_path (str): Dotted key path, e.g. "sequence.window"
            default: Default value

        Returns:
            The configured value or the default
        """
        try:
            value = self.config
            for key in key_path.split('.'):
                value = value[key]
            return value
        except (KeyError, TypeError):
            return default

    def set_value(self, key_path, value):
        """Set a configuration value in memory

        Args:
            key_path (str): Dotted key path, e.g. "verify.seed"
            value: Value to set
        """
        keys = key_path.split('.')
        d = self.config
        for key in keys[:-1]:
            if key not in d or not isinstance(d[key], dict):
                d[key] = {}
            d = d[key]
        d[keys[-1]] = value

    def verify_threads(self, flag: Optional[int] = None) -> int:
        """Worker count for verify suites: flag, then LCTPOLY_THREADS, then config"""
        if flag:
            return max(1, flag)
        env = os.environ.get("LCTPOLY_THREADS")
        if env:
            try:
                return max(1, int(env))
            except ValueError:
                logger.warning(f"Ignoring non-integer LCTPOLY_THREADS={env!r}")
        configured = self.get_value("verify.threads")
        if configured:
            return max(1, int(configured))
        return min(4, os.cpu_count() or 1)
