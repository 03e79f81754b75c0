import random

import pytest
from hypothesis import settings

settings.register_profile("ringsynth", max_examples=60, deadline=None)
settings.load_profile("ringsynth")


@pytest.fixture
def rng():
    return random.Random(20240611)
