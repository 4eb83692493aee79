"""Tests for settings configuration system."""

import pytest

from arcalg.conf import DEFAULTS, dim_cap, ext_degree, get_setting, validate_settings
from arcalg.exceptions import ImproperlyConfigured, ResourceCapExceeded


class TestGetSetting:
    """Tests for get_setting() function."""

    def test_get_setting_default(self):
        """get_setting returns the built-in default."""
        assert get_setting("DIM_CAP") == DEFAULTS["DIM_CAP"]

    def test_get_setting_from_environment(self, monkeypatch):
        """get_setting reads ARCALG_ variables and coerces them to int."""
        monkeypatch.setenv("ARCALG_DIM_CAP", "123")

        assert get_setting("DIM_CAP") == 123

    def test_get_setting_unknown_key_returns_none(self):
        """get_setting returns None for unknown keys without default."""
        assert get_setting("UNKNOWN_KEY") is None

    def test_get_setting_with_custom_default_parameter(self):
        """get_setting uses provided default parameter."""
        assert get_setting("NONEXISTENT_KEY", default="custom") == "custom"

    def test_get_setting_non_integer_raises(self, monkeypatch):
        """A non-numeric value for an integer setting is a configuration error."""
        monkeypatch.setenv("ARCALG_EXT_DEGREE", "three")

        with pytest.raises(ImproperlyConfigured, match="ARCALG_EXT_DEGREE.*integer"):
            get_setting("EXT_DEGREE")

    def test_deep_variants(self, monkeypatch):
        """dim_cap and ext_degree switch to the deep settings on request."""
        monkeypatch.setenv("ARCALG_DEEP_EXT_DEGREE", "6")

        assert dim_cap() == DEFAULTS["DIM_CAP"]
        assert dim_cap(deep=True) == DEFAULTS["DEEP_DIM_CAP"]
        assert ext_degree() == DEFAULTS["EXT_DEGREE"]
        assert ext_degree(deep=True) == 6


class TestValidateSettings:
    """Tests for validate_settings()."""

    def test_defaults_are_valid(self):
        """The shipped defaults validate."""
        validate_settings()

    def test_characteristic_must_be_prime(self, monkeypatch):
        """A composite characteristic is rejected."""
        monkeypatch.setenv("ARCALG_CHARACTERISTIC", "6")

        with pytest.raises(ImproperlyConfigured, match="CHARACTERISTIC must be 0 or a prime"):
            validate_settings()

    def test_prime_characteristic_accepted(self, monkeypatch):
        """A prime characteristic validates."""
        monkeypatch.setenv("ARCALG_CHARACTERISTIC", "7")

        validate_settings()

    @pytest.mark.parametrize("key", ["DIM_CAP", "ISO_ENUMERATION_CAP"])
    def test_caps_must_be_positive(self, monkeypatch, key):
        """A zero cap is rejected."""
        monkeypatch.setenv(f"ARCALG_{key}", "0")

        with pytest.raises(ImproperlyConfigured, match=f"{key} must be a positive integer"):
            validate_settings()

    def test_negative_workers_rejected(self, monkeypatch):
        """WORKERS must be non-negative."""
        monkeypatch.setenv("ARCALG_WORKERS", "-1")

        with pytest.raises(ImproperlyConfigured, match="WORKERS"):
            validate_settings()

    def test_unknown_format_rejected(self, monkeypatch):
        """FORMAT must be one of the supported formats."""
        monkeypatch.setenv("ARCALG_FORMAT", "xml")

        with pytest.raises(ImproperlyConfigured, match="FORMAT must be one of"):
            validate_settings()


class TestResourceCapExceeded:
    """Tests for the cap error message."""

    def test_message_names_the_cap(self):
        """The message names the setting, the request and how to raise it."""
        err = ResourceCapExceeded("DIM_CAP", 10, 25, "a resolution term")

        assert err.cap == "DIM_CAP"
        assert err.limit == 10
        assert err.value == 25
        assert "while building a resolution term" in str(err)
        assert "ARCALG_DIM_CAP" in str(err)
