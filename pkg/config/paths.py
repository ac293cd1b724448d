#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Project Paths Management

Centralized path management for the lctpoly project.
"""

import os
import sys
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv


class ProjectPaths:
    """Centralized project path management"""

    def __init__(self):
        # Project root is the parent of the config package
        self._project_root = Path(__file__).parent.parent.resolve()

        project_root_str = str(self._project_root)
        if project_root_str not in sys.path:
            sys.path.insert(0, project_root_str)

        # .env next to the project root; real environment variables win
        load_dotenv(self._project_root / ".env", override=False)

    @property
    def project_root(self) -> Path:
        """Get project root directory"""
        return self._project_root

    @property
    def config_dir(self) -> Path:
        """Get config directory"""
        return self._project_root / "config"

    @property
    def fixtures_dir(self) -> Path:
        """Get fixtures directory"""
        return self._project_root / "fixtures"

    def get_config_file(self, filename: Optional[str] = None) -> Path:
        """Get path to configuration file

        ``LCTPOLY_CONFIG`` overrides the default ``config.json`` in the project root.
        """
        if filename is None:
            override = os.environ.get("LCTPOLY_CONFIG")
            if override:
                return Path(override)
            filename = "config.json"
        return self._project_root / filename

    def fixture(self, name: str) -> Path:
        """Path of a bundled input file"""
        return self.fixtures_dir / name


# Global instance for easy access
paths = ProjectPaths()


def setup_project_paths():
    """Setup project paths - call this at the beginning of scripts"""
    return paths
