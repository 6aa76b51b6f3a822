import numpy as np
import pytest

from geobyte import Multivector, Quaternion


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)


def random_multivector(rng) -> Multivector:
    return Multivector(rng.standard_normal(8))


def random_unit_quaternion(rng) -> Quaternion:
    v = rng.standard_normal(4)
    v /= np.sqrt(np.dot(v, v))
    return Quaternion(Multivector([v[0], 0, 0, 0, v[1], v[2], v[3], 0]))
