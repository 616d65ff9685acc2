#!/usr/bin/env python3
"""Tests for ConfigLoader budgets, construction settings and merging."""

import sys
import json
import pytest
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from vertex_ramsey.utils.config import (
    DEFAULT_COPY_LIMIT,
    DEFAULT_DENSITY_TRIALS,
    DEFAULT_RAMSEY_NODES,
    ConfigLoader,
)


class TestDefaults:
    """Tests for values used when no config file exists."""

    def test_default_budgets(self):
        """Budgets fall back to the module constants."""
        loader = ConfigLoader("/nonexistent/config.json")
        assert loader.budget("copy_limit") == DEFAULT_COPY_LIMIT
        assert loader.budget("ramsey_nodes") == DEFAULT_RAMSEY_NODES
        assert loader.budget("cover_edge_cap") == 12

    def test_default_construction(self):
        loader = ConfigLoader("/nonexistent/config.json")
        assert loader.construction["density_trials"] == DEFAULT_DENSITY_TRIALS
        assert loader.construction["deletion_multiplier"] == 1.0
        assert loader.construction["clamp_probability"] is True

    def test_default_scalars(self):
        loader = ConfigLoader("/nonexistent/config.json")
        assert loader.seed == 0
        assert loader.jobs == 1
        assert loader.output_format == "json"
        assert loader.log_level == "WARNING"
        assert loader.colorer["direct_search"] is True

    def test_unknown_budget_raises_value_error(self):
        loader = ConfigLoader("/nonexistent/config.json")
        with pytest.raises(ValueError, match="Unknown budget 'frobs'"):
            loader.budget("frobs")


class TestDictMerge:
    """Tests for shallow dict merge behavior in get()."""

    def test_budget_override_keeps_other_defaults(self, tmp_path):
        """A single user budget merges with the defaults."""
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"budgets": {"ramsey_nodes": 500}}))

        loader = ConfigLoader(str(config_file))
        assert loader.budget("ramsey_nodes") == 500
        assert loader.budget("copy_limit") == DEFAULT_COPY_LIMIT

    def test_construction_override(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"construction": {"density_trials": 50}}))

        loader = ConfigLoader(str(config_file))
        assert loader.construction["density_trials"] == 50
        assert loader.construction["clamp_probability"] is True

    def test_non_dict_values_not_merged(self, tmp_path):
        """Non-dict values are replaced, not merged."""
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"seed": 42, "jobs": 4, "format": "text"}))

        loader = ConfigLoader(str(config_file))
        assert loader.seed == 42
        assert loader.jobs == 4
        assert loader.output_format == "text"

    def test_log_level_uppercased(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text(json.dumps({"logging": {"level": "debug"}}))
        assert ConfigLoader(str(config_file)).log_level == "DEBUG"


class TestBadFiles:
    """Unreadable config files fall back to defaults."""

    def test_invalid_json(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text("{not json")
        assert ConfigLoader(str(config_file)).seed == 0

    def test_non_object_root(self, tmp_path):
        config_file = tmp_path / "config.json"
        config_file.write_text("[1, 2, 3]")
        assert ConfigLoader(str(config_file)).budget("copy_limit") == DEFAULT_COPY_LIMIT

    def test_example_config_loads(self):
        """The shipped example config matches the defaults' keys."""
        example = Path(__file__).parent.parent / "config" / "config.example.json"
        loader = ConfigLoader(str(example))
        assert set(loader.budgets) == set(ConfigLoader.DEFAULT_CONFIG["budgets"])
        assert loader.budget("cover_edge_cap") == 12


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
