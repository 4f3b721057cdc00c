"""
Shared fixtures: the shipped surfaces.
"""

import pytest

from snake_calculus.surface import fixture_path, load_surface


@pytest.fixture(scope='session')
def torus():
    return load_surface(fixture_path('torus'))


@pytest.fixture(scope='session')
def annulus():
    return load_surface(fixture_path('annulus'))


@pytest.fixture(scope='session')
def annulus2():
    return load_surface(fixture_path('annulus2'))
