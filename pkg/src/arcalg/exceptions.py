"""Exception types raised by arcalg."""

from __future__ import annotations


class ArcAlgError(Exception):
    """Base class for every error raised by arcalg."""


class ValidationError(ArcAlgError, ValueError):
    """Raised when user supplied data is malformed or out of range."""


class ImproperlyConfigured(ArcAlgError):
    """Raised when a setting has the wrong type or an impossible value."""


class ResourceCapExceeded(ArcAlgError):
    """Raised when a computation would exceed a configured size cap.

    Attributes:
        cap: Name of the setting that was exceeded (e.g. ``"DIM_CAP"``).
        limit: The configured limit.
        value: The size that was requested.
    """

    def __init__(self, cap: str, limit: int, value: int, what: str = "") -> None:
        self.cap = cap
        self.limit = limit
        self.value = value
        detail = f" while building {what}" if what else ""
        super().__init__(
            f"{cap} exceeded{detail}: needed {value}, limit is {limit}. "
            f"Raise ARCALG_{cap} or pass --deep."
        )
