import itertools

import numpy as np
import pytest


def disc_sample(rng, n, radius=2.0):
    """Points uniform in the complex disc of the given radius."""
    r = radius * np.sqrt(rng.random(n))
    th = 2 * np.pi * rng.random(n)
    return [complex(z) for z in r * np.exp(1j * th)]


def match_error(got, want):
    """Smallest over pairings of the largest |g - w| / max(1, |w|)."""
    got, want = list(got), list(want)
    assert len(got) == len(want)
    return min(
        max(abs(g - w) / max(1.0, abs(w)) for g, w in zip(got, perm))
        for perm in itertools.permutations(want)
    )


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
