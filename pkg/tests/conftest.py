import pytest

from monopart.colourings import PairColouring, TripleColouring


def all_triple_colourings(n: int):
    for idx in range(1 << (n * (n - 1) * (n - 2) // 6)):
        yield idx, TripleColouring.from_int(n, idx)


def all_bnn_colourings(n: int):
    for idx in range(1 << (n * n)):
        yield idx, PairColouring.from_int("bnn", n, idx)


@pytest.fixture
def rng():
    import random

    return random.Random(0xC0FFEE)
