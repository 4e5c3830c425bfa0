import random

import pytest

from redactset import rs_keygen, rs_setup
from redactset.curve import Scalar
from redactset.polynomials import RootSet

SEED = 20260823


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="session")
def pp():
    return rs_setup()


@pytest.fixture(scope="session")
def keys16(pp):
    """One key pair at bound 16, trapdoors retained for oracle tests.

    Seeded differently from the rng fixture, or the first scalar a test
    draws would literally be the key trapdoor.
    """
    return rs_keygen(pp, 16, random.Random(SEED + 1), keep_trapdoors=True)


def random_rootset(rng, n):
    s = RootSet(Scalar.random(rng) for _ in range(n))
    while len(s) != n:
        s = RootSet(Scalar.random(rng) for _ in range(n))
    return s
