"""Configuration and settings for arcalg."""

from __future__ import annotations

import os
from typing import Any

from .exceptions import ImproperlyConfigured

ENV_PREFIX = "ARCALG_"

# Default settings
DEFAULTS: dict[str, Any] = {
    # Enumeration guard: largest C(m+n, m) accepted by enumerating operations
    "ENUMERATION_CAP": 5000,
    # Largest dimension of a resolution term or tensor space
    "DIM_CAP": 5000,
    "DEEP_DIM_CAP": 50000,
    # Default Ext degree bound (jmax)
    "EXT_DEGREE": 3,
    "DEEP_EXT_DEGREE": 4,
    # 0 for the rationals, otherwise a prime
    "CHARACTERISTIC": 0,
    "FORMAT": "text",
    # 0 means one worker per CPU
    "WORKERS": 0,
    "ISO_ATTEMPTS": 8,
    # Largest number of Hom combinations is_iso enumerates over a finite field
    "ISO_ENUMERATION_CAP": 4096,
    "SEED": 0,
}

FORMATS = ("text", "json", "csv")


def _coerce(key: str, raw: str, fallback: Any) -> Any:
    if isinstance(fallback, bool):
        return raw.strip().lower() in {"1", "true", "yes", "on"}
    if isinstance(fallback, int):
        try:
            return int(raw)
        except ValueError as e:
            raise ImproperlyConfigured(
                f"{ENV_PREFIX}{key} must be an integer. Got {raw!r} instead."
            ) from e
    return raw


def get_setting(key: str, default: Any = None) -> Any:
    """
    Get a setting from the environment or return the default value.

    Args:
        key: The setting key to retrieve (without the ``ARCALG_`` prefix)
        default: Default value if not found (overrides DEFAULTS)

    Returns:
        The setting value, coerced to the type of its default

    Example:
        >>> get_setting('DIM_CAP')
        5000
    """
    # Use provided default, or fall back to DEFAULTS
    fallback = default if default is not None else DEFAULTS.get(key)

    raw = os.environ.get(f"{ENV_PREFIX}{key}")
    if raw is None:
        return fallback
    return _coerce(key, raw, fallback)


def dim_cap(deep: bool = False) -> int:
    """Dimension cap for resolution terms and tensor spaces."""
    return int(get_setting("DEEP_DIM_CAP" if deep else "DIM_CAP"))


def ext_degree(deep: bool = False) -> int:
    """Default Ext degree bound."""
    return int(get_setting("DEEP_EXT_DEGREE" if deep else "EXT_DEGREE"))


def validate_settings() -> None:
    """Validate settings configuration.

    Raises:
        ImproperlyConfigured: If any setting has the wrong type or range.
    """
    from sympy import isprime

    for key in (
        "ENUMERATION_CAP",
        "DIM_CAP",
        "DEEP_DIM_CAP",
        "ISO_ATTEMPTS",
        "ISO_ENUMERATION_CAP",
    ):
        value = get_setting(key)
        if not isinstance(value, int) or value <= 0:
            raise ImproperlyConfigured(
                f"{ENV_PREFIX}{key} must be a positive integer. "
                f"Got {type(value).__name__} {value!r} instead."
            )

    for key in ("EXT_DEGREE", "DEEP_EXT_DEGREE", "WORKERS", "SEED"):
        value = get_setting(key)
        if not isinstance(value, int) or value < 0:
            raise ImproperlyConfigured(
                f"{ENV_PREFIX}{key} must be a non-negative integer. "
                f"Got {value!r} instead."
            )

    char = get_setting("CHARACTERISTIC")
    if char != 0 and not isprime(char):
        raise ImproperlyConfigured(
            f"{ENV_PREFIX}CHARACTERISTIC must be 0 or a prime. Got {char} instead."
        )

    fmt = get_setting("FORMAT")
    if fmt not in FORMATS:
        raise ImproperlyConfigured(
            f"{ENV_PREFIX}FORMAT must be one of {', '.join(FORMATS)}. "
            f"Got {fmt!r} instead."
        )
