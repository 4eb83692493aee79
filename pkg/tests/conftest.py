"""
Pytest configuration and fixtures for arcalg tests.
"""

import os

import pytest

from arcalg.arcalgebra import get_context
from arcalg.combinatorics import Weight


@pytest.fixture(autouse=True)
def clean_settings(monkeypatch):
    """Run every test against the default settings."""
    for key in list(os.environ):
        if key.startswith("ARCALG_"):
            monkeypatch.delenv(key)


@pytest.fixture(scope="session")
def k11():
    """K^1_1: two weights, dimension 5."""
    return get_context(1, 1)


@pytest.fixture(scope="session")
def k12():
    """K^1_2: three weights, two of them regular."""
    return get_context(1, 2)


@pytest.fixture(scope="session")
def k22():
    """K^2_2: six weights."""
    return get_context(2, 2)


@pytest.fixture
def w():
    """Shorthand for building weights in assertions."""
    return Weight
