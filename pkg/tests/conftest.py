import numpy as np
import pytest

from slicefock import Quaternion


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def qdist(a: Quaternion, b: Quaternion) -> float:
    return (a - b).modulus()


def random_quat(rng, scale: float = 1.0) -> Quaternion:
    return Quaternion(*rng.uniform(-scale, scale, 4))
