import numpy as np
import pytest

from helpers import SEED
from mgsquiver.quiver import IceQuiver


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(SEED)


@pytest.fixture
def a2() -> IceQuiver:
    return IceQuiver.from_labels(["1", "2"], [("1", "2")])
