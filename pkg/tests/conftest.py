import numpy as np
import pytest

from gnum import builtin, validate


@pytest.fixture(scope="session")
def sys23():
    return validate({"kind": "discrete", "primes": [2.0, 3.0], "label": "{2,3}"})


@pytest.fixture(scope="session")
def sys2():
    return validate({"kind": "discrete", "primes": [2.0], "label": "{2}"})


@pytest.fixture(scope="session")
def sys22():
    return validate({"kind": "discrete", "primes": [2.0, 2.0], "label": "{2,2}"})


@pytest.fixture(scope="session")
def rational_small():
    return builtin("rational", limit=10_000)


@pytest.fixture(scope="session")
def pi0_system():
    return builtin("pi0")


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(1729)
