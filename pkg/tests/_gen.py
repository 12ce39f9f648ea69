"""Random instance generators shared by the tests."""

import random

from zsplines import LabeledGraph


def random_graph(rng, n, lo=1, hi=30, density=0.3, connected=True):
    """Random labeled graph; a spanning tree plus extra edges when connected."""
    edges = []
    if connected:
        for k in range(1, n):
            edges.append((rng.randrange(k), k, rng.randint(lo, hi)))
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < density:
                edges.append((a, b, rng.randint(lo, hi)))
    rng.shuffle(edges)
    perm = list(range(n))
    rng.shuffle(perm)
    edges = [(perm[a], perm[b], r) for a, b, r in edges]
    m = [rng.randint(lo, hi) for _ in range(n)]
    return LabeledGraph.from_labels(m, edges)


def simple_graph(rng, n, lo=1, hi=30, density=0.5):
    """Random graph with at most one edge per vertex pair."""
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
    return LabeledGraph.from_labels(
        [rng.randint(lo, hi) for _ in range(n)],
        [(a, b, rng.randint(lo, hi)) for a, b in pairs],
    )


def seeded(seed):
    return random.Random(seed)
