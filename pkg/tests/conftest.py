import numpy as np
import pytest

from fastbin import precompute, validate_bins

WORKED_BOUNDARIES = [2.0, 11.0, 19.0, 20.0, 21.0, 27.0, 29.0, 30.0]


@pytest.fixture(scope="session")
def worked_bins():
    return validate_bins(WORKED_BOUNDARIES)


@pytest.fixture(scope="session")
def worked_acc(worked_bins):
    return precompute(worked_bins, 0)


def random_binset(rng, m1, low=0.0, high=1.0):
    """Strictly increasing boundaries with pinned endpoints, for tests."""
    while True:
        interior = np.sort(rng.uniform(low, high, m1 - 1))
        arr = np.concatenate(([low], interior, [high]))
        if (arr[1:] > arr[:-1]).all():
            return validate_bins(arr)
