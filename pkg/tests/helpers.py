"""Shared test utilities: seeded random instances and brute-force references."""

from __future__ import annotations

from itertools import combinations

import numpy as np

from hypercore import Hypergraph


def random_instance(
    rng: np.random.Generator,
    max_nodes: int = 10,
    max_edges: int = 15,
    max_card: int = 4,
) -> Hypergraph:
    """Small random hypergraph; node universe fixed so isolated ids occur."""
    n = int(rng.integers(1, max_nodes + 1))
    m = int(rng.integers(0, max_edges + 1))
    edges = []
    for _ in range(m):
        card = int(rng.integers(1, min(max_card, n) + 1))
        edges.append(rng.choice(n, size=card, replace=False))
    return Hypergraph(edges, num_nodes=n)


def brute_force_nom(G: Hypergraph) -> dict[tuple[int, int], int]:
    """Pair co-occurrence counts by a double loop over edges and pairs."""
    counts: dict[tuple[int, int], int] = {}
    for e in G.iter_edges():
        for u, v in combinations(e, 2):
            counts[(u, v)] = counts.get((u, v), 0) + 1
    return counts


def brute_force_neighbours(G: Hypergraph, v: int) -> set[int]:
    out: set[int] = set()
    for e in G.iter_edges():
        if v in e:
            out.update(e)
    out.discard(v)
    return out
