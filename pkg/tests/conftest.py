import pytest
from hypothesis import HealthCheck, settings

from chordblend.idioms import c_major_preset, fsharp_major_preset

settings.register_profile(
    "default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@pytest.fixture
def c_major():
    return c_major_preset()


@pytest.fixture
def fsharp_major():
    return fsharp_major_preset()
