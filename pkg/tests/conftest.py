import os
import random

import pytest

from genus_forge.cli import DEFAULT_SEED


def property_seed() -> int:
    return int(os.environ.get("GENUS_FORGE_SEED", DEFAULT_SEED))


@pytest.fixture
def rng() -> random.Random:
    return random.Random(property_seed())
