"""Shared fixtures: backend selection and numba warmup.

The ``backend`` fixture runs a test once per available backend and restores
the previous selection afterwards. The session-scoped autouse warmup
triggers numba compilation up front so timed tests measure the algorithms,
not the JIT.
"""

import numpy as np
import pytest

from aplab import GroundSet, count_aps, count_aps_through, degree_profile
from aplab import kernels


@pytest.fixture(scope="session", autouse=True)
def _warm_kernels():
    prev = kernels.get_backend()
    for name in kernels.available_backends():
        kernels.set_backend(name)
        D = GroundSet.full(12)
        S = GroundSet(12, [1, 2, 4, 8, 9])
        count_aps(S, D, 2, 3)
        count_aps(S, GroundSet(12, range(1, 11)), 2, 4)
        count_aps(S, D, 3, 3)
        count_aps(S, D, 0, 3)
        count_aps_through(5, S, D, 1, 3)
        degree_profile(S, D, 1, 3)
    kernels.set_backend(prev)


@pytest.fixture(params=sorted(kernels.available_backends()))
def backend(request):
    prev = kernels.set_backend(request.param)
    yield request.param
    kernels.set_backend(prev)


@pytest.fixture
def rng():
    return np.random.default_rng(20260823)
