#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configuration Package

Centralized configuration management for lctpoly.
"""

from .paths import ProjectPaths
from .settings import DEFAULT_CONFIG, ConfigManager

__all__ = ['ProjectPaths', 'ConfigManager', 'DEFAULT_CONFIG']
