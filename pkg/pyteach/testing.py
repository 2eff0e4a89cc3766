"""
Pytest fixtures shared by the test suite.
"""
import numpy as np
import pytest

from .config import reset_options
from .corpus import appendix_class, warmuth_class


@pytest.fixture
def warmuth():
    return warmuth_class()


@pytest.fixture
def appendix():
    return appendix_class()


@pytest.fixture
def rng():
    return np.random.default_rng(42)


@pytest.fixture
def options():
    """
    Discard configuration overrides made by the test.
    """
    reset_options()
    yield
    reset_options()
