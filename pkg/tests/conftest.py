"""
Shared fixtures for the toric_mori test suite.

Fan and morphism fixtures are built in tests/helpers.py; this module wraps
the ones used across several test files.
"""

import pytest

from toric_mori.config import ConfigLoader
from tests import helpers


# ============================================================================
# Configuration Fixtures
# ============================================================================

@pytest.fixture
def config():
    """Load engine configuration for tests."""
    return ConfigLoader().load("config.json")


# ============================================================================
# Fan Fixtures
# ============================================================================

@pytest.fixture
def p2():
    return helpers.p2_fan()


@pytest.fixture
def f1():
    return helpers.f1_fan()


@pytest.fixture
def p121():
    return helpers.p121_fan()


# ============================================================================
# Morphism Fixtures
# ============================================================================

@pytest.fixture
def p2_to_point():
    return helpers.p2_to_point()


@pytest.fixture
def f1_to_point():
    return helpers.f1_to_point()


@pytest.fixture
def p1xp1_to_p1():
    return helpers.p1xp1_to_p1()


@pytest.fixture
def blowup_to_a2():
    return helpers.blowup_to_a2()


@pytest.fixture
def atiyah():
    return helpers.atiyah_flop()


@pytest.fixture
def weighted():
    return helpers.weighted_flip()


@pytest.fixture
def fixture_morphisms():
    return helpers.all_fixture_morphisms()
