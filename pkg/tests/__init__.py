"""Tests for arcalg."""
