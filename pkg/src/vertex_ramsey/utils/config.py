#!/usr/bin/env python3
"""
Configuration loader for the vertex-ramsey toolkit.

Search budgets, construction constants and CLI defaults live here so that
library calls and CLI runs share one source of defaults.
"""

import json
import logging
from pathlib import Path
from typing import Dict, Any, Optional

DEFAULT_COPY_LIMIT = 100_000
DEFAULT_FOREST_NODES = 1_000_000
DEFAULT_PACKING_NODES = 1_000_000
DEFAULT_RAMSEY_NODES = 100_000_000
DEFAULT_SUBSET_CAP = 1_000_000
DEFAULT_COVER_EDGE_CAP = 12
DEFAULT_COVER_LIMIT = 200_000
DEFAULT_DELETION_MULTIPLIER = 1.0
DEFAULT_DENSITY_TRIALS = 1000
DEFAULT_SEED = 0


class ConfigLoader:
    """Load and manage configuration from JSON files."""

    DEFAULT_CONFIG = {
        "budgets": {
            "copy_limit": DEFAULT_COPY_LIMIT,
            "forest_nodes": DEFAULT_FOREST_NODES,
            "packing_nodes": DEFAULT_PACKING_NODES,
            "ramsey_nodes": DEFAULT_RAMSEY_NODES,
            "subset_cap": DEFAULT_SUBSET_CAP,
            "cover_edge_cap": DEFAULT_COVER_EDGE_CAP,
            "cover_limit": DEFAULT_COVER_LIMIT,
        },
        "construction": {
            "deletion_multiplier": DEFAULT_DELETION_MULTIPLIER,
            "density_trials": DEFAULT_DENSITY_TRIALS,
            "clamp_probability": True,
        },
        "colorer": {
            "direct_search": True,
        },
        "seed": DEFAULT_SEED,
        "jobs": 1,
        "format": "json",
        "logging": {
            "level": "WARNING",
        },
    }

    def __init__(self, config_path: Optional[str] = None):
        """
        Initialize configuration loader.

        Args:
            config_path: Path to config JSON file. Defaults to the first
                existing file among the standard locations.
        """
        self.config_path = config_path or self._find_config_file()
        self._config: Dict[str, Any] = {}
        self.load()

    def _find_config_file(self) -> str:
        """Find config file in standard locations."""
        search_paths = [
            Path("config/config.json"),
            Path("config.json"),
            Path.home() / ".vertex_ramsey" / "config.json",
        ]

        for path in search_paths:
            if path.exists():
                return str(path)

        return "config/config.json"

    def load(self) -> Dict[str, Any]:
        """Load configuration from file."""
        path = Path(self.config_path)

        if path.exists():
            try:
                with open(path, "r") as f:
                    self._config = json.load(f)
                logging.debug(f"Config loaded from {self.config_path}")
            except json.JSONDecodeError as e:
                logging.warning(f"Invalid JSON in {self.config_path}: {e}")
                self._config = {}
            except OSError as e:
                logging.warning(f"Error loading config: {e}")
                self._config = {}
        else:
            logging.info(f"Config file not found: {self.config_path}, using defaults")
            self._config = {}

        if not isinstance(self._config, dict):
            logging.warning(f"Config root in {self.config_path} is not an object, ignoring")
            self._config = {}

        return self._config

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value with fallback to defaults.

        For dict values, performs a shallow merge of defaults with user config
        so user-defined entries add to (rather than replace) defaults.
        """
        user_val = self._config.get(key)
        default_val = self.DEFAULT_CONFIG.get(key)

        if user_val is not None and default_val is not None:
            if isinstance(user_val, dict) and isinstance(default_val, dict):
                merged = default_val.copy()
                merged.update(user_val)
                return merged
            return user_val
        if user_val is not None:
            return user_val
        if default_val is not None:
            return default_val
        return default

    def get_all(self) -> Dict[str, Any]:
        """Get all configuration values merged with defaults."""
        return {key: self.get(key) for key in set(self.DEFAULT_CONFIG) | set(self._config)}

    @property
    def budgets(self) -> Dict[str, int]:
        """Search and enumeration budgets."""
        return self.get("budgets")

    def budget(self, name: str) -> int:
        """Single budget value by name.

        Raises:
            ValueError: If the budget name is unknown.
        """
        budgets = self.budgets
        if name not in budgets:
            raise ValueError(f"Unknown budget '{name}'. Available: {sorted(budgets)}")
        return int(budgets[name])

    @property
    def construction(self) -> Dict[str, Any]:
        return self.get("construction")

    @property
    def colorer(self) -> Dict[str, Any]:
        return self.get("colorer")

    @property
    def seed(self) -> int:
        return int(self.get("seed", DEFAULT_SEED))

    @property
    def jobs(self) -> int:
        return int(self.get("jobs", 1))

    @property
    def output_format(self) -> str:
        return self.get("format", "json")

    @property
    def log_level(self) -> str:
        return str(self.get("logging")["level"]).upper()
