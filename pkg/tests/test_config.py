"""Tests for environment-driven defaults."""

import logging
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.koszul_golod import config  # noqa: E402


class TestIntEnv:
    """Integer settings read from KOSZUL_GOLOD_* variables."""

    def test_valid_value(self, monkeypatch):
        """A well-formed integer overrides the default."""
        monkeypatch.setenv("KOSZUL_GOLOD_TEST_BOUND", "12")
        assert config._int_env("KOSZUL_GOLOD_TEST_BOUND", 5) == 12

    def test_unset_or_blank(self, monkeypatch):
        """Missing and blank variables fall back silently."""
        monkeypatch.delenv("KOSZUL_GOLOD_TEST_BOUND", raising=False)
        assert config._int_env("KOSZUL_GOLOD_TEST_BOUND", 5) == 5
        monkeypatch.setenv("KOSZUL_GOLOD_TEST_BOUND", "  ")
        assert config._int_env("KOSZUL_GOLOD_TEST_BOUND", 5) == 5

    def test_malformed_value_is_logged(self, monkeypatch, caplog):
        """A malformed value falls back with a warning naming the variable."""
        monkeypatch.setenv("KOSZUL_GOLOD_TEST_BOUND", "ten")
        with caplog.at_level(logging.WARNING, logger=config.__name__):
            assert config._int_env("KOSZUL_GOLOD_TEST_BOUND", 5) == 5
        assert "KOSZUL_GOLOD_TEST_BOUND" in caplog.text
        assert "'ten'" in caplog.text
