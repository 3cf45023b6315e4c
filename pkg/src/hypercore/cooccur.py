"""Pairwise co-occurrence counting and the thresholded co-occurrence graph.

The neighbour-occurrence map records, for every unordered node pair, how many
hyperedges contain both nodes.  It is computed once from the original edge
list: every edge of cardinality c contributes its c*(c-1)/2 member pairs, and
the accumulated multiset of pairs is reduced to (pair, count) entries by a
sort.  Thresholding the map at a minimum count g yields a simple graph (the
co-occurrence graph) on which the peeling stage operates; at g=1 this graph is
exactly the clique expansion (2-section) of the hypergraph.
"""

from __future__ import annotations

import warnings
from typing import IO

import numpy as np

from .hypergraph import Hypergraph


class NeighbourOccurrenceMap:
    """Co-occurrence counts for every node pair sharing at least one edge.

    The canonical store is three parallel arrays (u, v, count) with u < v,
    sorted by (u, v).  Symmetric per-node adjacency views are materialised
    lazily on first per-node access; bulk consumers (thresholding, dumps) work
    straight off the canonical arrays.
    """

    def __init__(self, num_nodes: int, pair_u: np.ndarray, pair_v: np.ndarray, pair_count: np.ndarray):
        self.num_nodes = num_nodes
        self.pair_u = pair_u
        self.pair_v = pair_v
        self.pair_count = pair_count
        self._indptr: np.ndarray | None = None
        self._nbrs: np.ndarray | None = None
        self._counts: np.ndarray | None = None

    @property
    def num_pairs(self) -> int:
        return len(self.pair_u)

    def max_count(self) -> int:
        return int(self.pair_count.max()) if self.num_pairs else 0

    def count(self, u: int, v: int) -> int:
        """Co-occurrence count of the pair, 0 when the nodes never co-occur."""
        if u == v:
            raise ValueError("co-occurrence is defined for distinct nodes")
        if u > v:
            u, v = v, u
        lo = np.searchsorted(self.pair_u, u, side="left")
        hi = np.searchsorted(self.pair_u, u, side="right")
        pos = lo + np.searchsorted(self.pair_v[lo:hi], v, side="left")
        if pos < hi and self.pair_v[pos] == v:
            return int(self.pair_count[pos])
        return 0

    def _materialise(self) -> None:
        if self._indptr is not None:
            return
        n = self.num_nodes
        rows = np.concatenate([self.pair_u, self.pair_v])
        cols = np.concatenate([self.pair_v, self.pair_u])
        vals = np.concatenate([self.pair_count, self.pair_count])
        order = np.argsort(rows, kind="stable")
        self._nbrs = cols[order]
        self._counts = vals[order]
        self._indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(rows, minlength=n), out=self._indptr[1:])

    def neighbours_with_counts(self, v: int) -> tuple[np.ndarray, np.ndarray]:
        """All co-occurring partners of ``v`` with their counts."""
        if not 0 <= v < self.num_nodes:
            raise ValueError(f"node id {v} out of range [0, {self.num_nodes})")
        self._materialise()
        lo, hi = self._indptr[v], self._indptr[v + 1]
        return self._nbrs[lo:hi], self._counts[lo:hi]

    def as_dicts(self) -> list[dict[int, int]]:
        """Per-node dict views; intended for tests and small graphs."""
        out: list[dict[int, int]] = [dict() for _ in range(self.num_nodes)]
        for u, v, c in zip(self.pair_u, self.pair_v, self.pair_count):
            out[int(u)][int(v)] = int(c)
            out[int(v)][int(u)] = int(c)
        return out


class CoocGraph:
    """Simple undirected graph of node pairs co-occurring at least ``g`` times.

    Adjacency is CSR-style (indptr + flat neighbour array), symmetric, without
    self loops.  Immutable once built.
    """

    def __init__(self, num_nodes: int, g: int, indptr: np.ndarray, nbrs: np.ndarray):
        self.num_nodes = num_nodes
        self.g = g
        self.indptr = indptr
        self.nbrs = nbrs

    @property
    def num_edges(self) -> int:
        return len(self.nbrs) // 2

    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, v: int) -> int:
        return int(self.indptr[v + 1] - self.indptr[v])

    def neighbours(self, v: int) -> np.ndarray:
        lo, hi = self.indptr[v], self.indptr[v + 1]
        return np.sort(self.nbrs[lo:hi])

    def edge_set(self) -> set[tuple[int, int]]:
        """All edges as (min, max) tuples; convenience for tests."""
        out = set()
        for v in range(self.num_nodes):
            lo, hi = self.indptr[v], self.indptr[v + 1]
            for u in self.nbrs[lo:hi]:
                out.add((min(v, int(u)), max(v, int(u))))
        return out


def build_nom(G: Hypergraph, warn_cardinality: int | None = None) -> NeighbourOccurrenceMap:
    """Count, for every node pair, the hyperedges containing both nodes.

    Duplicate hyperedges contribute separately.  Counts are taken from the
    full edge list once; later peeling never recounts, it only discards nodes.

    ``warn_cardinality`` flags edges above the given cardinality: one giant
    edge contributes quadratically many pairs and dominates the run time.
    """
    if warn_cardinality is not None:
        big = sum(1 for j in range(G.num_edges) if G.cardinality(j) > warn_cardinality)
        if big:
            warnings.warn(
                f"{big} hyperedge(s) exceed cardinality {warn_cardinality}; "
                "pair counting is quadratic in edge cardinality",
                stacklevel=2,
            )
    n = G.num_nodes
    chunks = list(G._pair_key_chunks())
    if not chunks:
        empty = np.zeros(0, dtype=np.int64)
        return NeighbourOccurrenceMap(n, empty, empty.copy(), empty.copy())
    keys = np.concatenate(chunks)
    del chunks
    keys.sort()
    change = np.empty(len(keys), dtype=bool)
    change[0] = True
    np.not_equal(keys[1:], keys[:-1], out=change[1:])
    starts = np.flatnonzero(change)
    counts = np.diff(np.append(starts, len(keys)))
    ukeys = keys[starts].astype(np.int64)
    del keys, change, starts
    pair_u, pair_v = ukeys // n, ukeys % n
    return NeighbourOccurrenceMap(n, pair_u, pair_v, counts.astype(np.int64))


def threshold_graph(nom: NeighbourOccurrenceMap, g: int) -> CoocGraph:
    """Keep exactly the pairs with co-occurrence count >= g."""
    if g < 1:
        raise ValueError(f"co-occurrence threshold g must be >= 1, got {g}")
    n = nom.num_nodes
    sel = nom.pair_count >= g
    su, sv = nom.pair_u[sel], nom.pair_v[sel]
    rows = np.concatenate([su, sv])
    cols = np.concatenate([sv, su])
    indptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.bincount(rows, minlength=n), out=indptr[1:])
    order = np.argsort(rows, kind="stable")
    return CoocGraph(n, g, indptr, cols[order])


def dump_nom_csv(nom: NeighbourOccurrenceMap, stream: IO[str], labels: list[str] | None = None) -> None:
    """Debug dump of the canonical pair store as ``u,v,count`` rows."""
    stream.write("u,v,count\n")
    for u, v, c in zip(nom.pair_u, nom.pair_v, nom.pair_count):
        if labels is not None:
            stream.write(f"{labels[int(u)]},{labels[int(v)]},{int(c)}\n")
        else:
            stream.write(f"{int(u)},{int(v)},{int(c)}\n")
