import numpy as np
import pytest

from taylorpade import DEFAULT_PRIME


@pytest.fixture
def p():
    return DEFAULT_PRIME


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
