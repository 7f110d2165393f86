import random

import pytest

from src.common.config import get_settings
from src.sfs import SeifertForm


@pytest.fixture(autouse=True)
def fresh_settings():
    """Settings are cached per process; tests that touch the environment need a fresh copy."""
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240601)


@pytest.fixture
def headline_form() -> SeifertForm:
    """Surgery on a knot in S^3 whose seiferter drills to L(15,4)."""
    return SeifertForm.of((5, -2), (3, -1), (4, 3))


@pytest.fixture
def family_form() -> SeifertForm:
    """First member of the H = 17 obstructed family."""
    return SeifertForm.of((3, -17), (5, 17), (7, 17))


@pytest.fixture
def mod5_form() -> SeifertForm:
    return SeifertForm.of((2, -3), (3, 1), (7, 9))
