import numpy as np
import pytest

from kcut.graphs import Graph


def random_graph(n, p, rng, name=None):
    W = (rng.random((n, n)) < p).astype(float)
    W = np.triu(W, 1)
    W = W + W.T
    return Graph(n=n, weights=W, name=name or f"G({n},{p})")


def random_weighted_graph(n, p, rng):
    W = np.where(rng.random((n, n)) < p, rng.integers(1, 9, size=(n, n)).astype(float), 0.0)
    W = np.triu(W, 1)
    W = W + W.T
    return Graph(n=n, weights=W)


@pytest.fixture
def rng():
    return np.random.Generator(np.random.PCG64(12345))
