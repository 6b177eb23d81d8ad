import random

import pytest

from anosov import corpus
from anosov.ratmat import RatMatrix


@pytest.fixture(scope="session")
def d3():
    return corpus.d3_group()


@pytest.fixture(scope="session")
def rho3(d3):
    return corpus.rho3(d3)


@pytest.fixture(scope="session")
def rho1(d3):
    return corpus.rho1(d3)


@pytest.fixture(scope="session")
def rho2(d3):
    return corpus.rho2(d3)


@pytest.fixture(scope="session")
def q8_rep():
    return corpus.q8_rep()


@pytest.fixture(scope="session")
def klein():
    return corpus.klein_rep()


@pytest.fixture(scope="session")
def torus():
    return corpus.torus_rep()


@pytest.fixture(scope="session")
def c4_rep():
    return corpus.c4_rep()


@pytest.fixture(scope="session")
def c5_rep():
    return corpus.c5_rep()


def random_unimodular(rng: random.Random, n: int, shears: int = 6) -> RatMatrix:
    """Product of elementary shears and swaps: integer matrix with det ±1."""
    m = RatMatrix.identity(n)
    for _ in range(shears):
        i, j = rng.sample(range(n), 2)
        rows = [list(m.row(r)) for r in range(n)]
        coeff = rng.choice([-2, -1, 1, 2])
        rows[i] = [a + coeff * b for a, b in zip(rows[i], rows[j])]
        m = RatMatrix.from_rows(rows)
        if rng.random() < 0.3:
            rows = [list(m.row(r)) for r in range(n)]
            rows[i], rows[j] = rows[j], rows[i]
            m = RatMatrix.from_rows(rows)
    return m
