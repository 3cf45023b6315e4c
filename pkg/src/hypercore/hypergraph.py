"""In-memory hypergraph with incidence indexing and hyperedge-list I/O.

A hypergraph is a node universe ``0..n-1`` plus a list of hyperedges, where
each hyperedge is a set of nodes of any cardinality.  Duplicate hyperedges are
kept as distinct entries (multiset semantics): co-occurrence frequencies
counted elsewhere in this package depend on how often a pair of nodes appears
together, so collapsing identical edges would change results.  Node ids are
dense integers; external labels from parsed files are kept in a side table.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

import numpy as np

_TOKEN_SPLIT = re.compile(r"[\s,]+")

# Pair keys are packed as u * n + v; they fit in uint32 while n * n < 2**32.
_UINT32_MAX_NODES = 65535


@dataclass(frozen=True)
class HypergraphStats:
    """Corpus-level summary: node/edge counts and the two mean sizes."""

    num_nodes: int
    num_edges: int
    avg_neighbour_size: float
    avg_edge_cardinality: float

    def to_json(self) -> str:
        return json.dumps(
            {
                "num_nodes": self.num_nodes,
                "num_edges": self.num_edges,
                "avg_neighbour_size": self.avg_neighbour_size,
                "avg_edge_cardinality": self.avg_edge_cardinality,
            }
        )


class Hypergraph:
    """Immutable hypergraph over dense node ids ``0..num_nodes-1``.

    Edges are stored flat (members concatenated, plus offsets), each edge
    sorted ascending with duplicate members removed.  The incidence index maps
    every node to the ascending list of edge ids containing it.  Instances are
    not mutated after construction and are safe for concurrent reads.
    """

    def __init__(
        self,
        edges: Iterable[Iterable[int]],
        num_nodes: int | None = None,
        labels: list[str] | None = None,
    ):
        cleaned = [tuple(sorted(set(map(int, e)))) for e in edges]
        for e in cleaned:
            if not e:
                raise ValueError("hyperedges must contain at least one node")
            if e[0] < 0:
                raise ValueError(f"negative node id {e[0]} in hyperedge")
        highest = max((e[-1] for e in cleaned), default=-1)
        if num_nodes is None:
            num_nodes = highest + 1
        elif highest >= num_nodes:
            raise ValueError(f"node id {highest} out of range for num_nodes={num_nodes}")
        if labels is not None:
            if len(labels) != num_nodes:
                raise ValueError("labels must have one entry per node")
            self.labels = list(labels)
        else:
            self.labels = [str(i) for i in range(num_nodes)]

        self.num_nodes = int(num_nodes)
        m = len(cleaned)
        cards = np.fromiter((len(e) for e in cleaned), dtype=np.int64, count=m)
        total = int(cards.sum())
        self._edge_indptr = np.zeros(m + 1, dtype=np.int64)
        np.cumsum(cards, out=self._edge_indptr[1:])
        self._members = np.fromiter(
            (v for e in cleaned for v in e), dtype=np.int64, count=total
        )

        # incidence: CSR over nodes; stable sort keeps edge ids ascending per node
        owner = np.repeat(np.arange(m, dtype=np.int64), cards)
        order = np.argsort(self._members, kind="stable")
        self._inc_edges = owner[order]
        counts = np.bincount(self._members, minlength=self.num_nodes)
        self._inc_indptr = np.zeros(self.num_nodes + 1, dtype=np.int64)
        np.cumsum(counts, out=self._inc_indptr[1:])

        for arr in (self._edge_indptr, self._members, self._inc_edges, self._inc_indptr):
            arr.setflags(write=False)

    # -- basic accessors ------------------------------------------------

    @property
    def num_edges(self) -> int:
        return len(self._edge_indptr) - 1

    def nodes(self) -> range:
        return range(self.num_nodes)

    def label(self, v: int) -> str:
        return self.labels[v]

    def cardinality(self, j: int) -> int:
        """Number of distinct members of edge ``j``."""
        self._check_edge(j)
        return int(self._edge_indptr[j + 1] - self._edge_indptr[j])

    def edge_members(self, j: int) -> tuple[int, ...]:
        """Members of edge ``j`` as an ascending tuple of node ids."""
        self._check_edge(j)
        lo, hi = self._edge_indptr[j], self._edge_indptr[j + 1]
        return tuple(int(v) for v in self._members[lo:hi])

    def iter_edges(self) -> Iterator[tuple[int, ...]]:
        for j in range(self.num_edges):
            yield self.edge_members(j)

    def edge_list(self) -> list[tuple[int, ...]]:
        return list(self.iter_edges())

    def degree(self, v: int) -> int:
        """Count of hyperedges incident to ``v`` (duplicates count separately)."""
        self._check_node(v)
        return int(self._inc_indptr[v + 1] - self._inc_indptr[v])

    def incident_edges(self, v: int) -> tuple[int, ...]:
        """Ascending ids of the edges containing ``v``."""
        self._check_node(v)
        lo, hi = self._inc_indptr[v], self._inc_indptr[v + 1]
        return tuple(int(j) for j in self._inc_edges[lo:hi])

    def neighbours(self, v: int) -> set[int]:
        """Distinct nodes sharing at least one hyperedge with ``v``."""
        self._check_node(v)
        lo, hi = self._inc_indptr[v], self._inc_indptr[v + 1]
        out: set[int] = set()
        for j in self._inc_edges[lo:hi]:
            elo, ehi = self._edge_indptr[j], self._edge_indptr[j + 1]
            out.update(int(u) for u in self._members[elo:ehi])
        out.discard(int(v))
        return out

    def _check_node(self, v: int) -> None:
        if not 0 <= v < self.num_nodes:
            raise ValueError(f"node id {v} out of range [0, {self.num_nodes})")

    def _check_edge(self, j: int) -> None:
        if not 0 <= j < self.num_edges:
            raise ValueError(f"edge id {j} out of range [0, {self.num_edges})")

    # -- derived structures ----------------------------------------------

    def induced_subhypergraph(self, nodes: Iterable[int], mode: str = "weak") -> Hypergraph:
        """Restrict the edge list to a node subset, keeping ids and labels.

        ``weak``:   every edge is intersected with the subset; edges left empty
                    are dropped (an edge may shrink, even to a singleton).
        ``strong``: only edges entirely contained in the subset are kept.

        The node universe is unchanged; nodes outside the subset simply end up
        with no incident edges.
        """
        if mode not in ("weak", "strong"):
            raise ValueError(f"mode must be 'weak' or 'strong', got {mode!r}")
        keep = set()
        for v in nodes:
            self._check_node(v)
            keep.add(int(v))
        new_edges: list[tuple[int, ...]] = []
        for e in self.iter_edges():
            if mode == "strong":
                if all(v in keep for v in e):
                    new_edges.append(e)
            else:
                inter = tuple(v for v in e if v in keep)
                if inter:
                    new_edges.append(inter)
        return Hypergraph(new_edges, num_nodes=self.num_nodes, labels=self.labels)

    def stats(self) -> HypergraphStats:
        """Node/edge counts plus mean distinct-neighbour count and mean edge
        cardinality.  The neighbour mean averages over every node in the
        universe, isolated nodes included."""
        n, m = self.num_nodes, self.num_edges
        avg_card = float(len(self._members) / m) if m else 0.0
        # sum over v of |neighbours(v)| counts every distinct co-occurring
        # pair twice, so the mean is 2 * #pairs / n
        avg_nbr = 2.0 * self._distinct_pair_count() / n if n else 0.0
        return HypergraphStats(n, m, avg_nbr, avg_card)

    def _distinct_pair_count(self) -> int:
        chunks = list(self._pair_key_chunks())
        if not chunks:
            return 0
        keys = np.concatenate(chunks)
        keys.sort()
        return int(1 + np.count_nonzero(keys[1:] != keys[:-1]))

    # -- pair enumeration (shared with co-occurrence counting) ------------

    @property
    def pair_key_dtype(self) -> np.dtype:
        """Dtype able to hold packed pair keys ``u * num_nodes + v``."""
        return np.dtype(np.uint32 if self.num_nodes <= _UINT32_MAX_NODES else np.int64)

    def _pair_key_chunks(self, block_pairs: int = 8_000_000) -> Iterator[np.ndarray]:
        """Yield packed keys ``u * n + v`` (u < v) of every unordered member
        pair of every edge, duplicates included.

        Edges are grouped by cardinality so the pair expansion is a couple of
        fancy-indexing gathers per group instead of a per-edge Python loop.
        Each yielded array holds at most ``block_pairs`` keys, except when a
        single edge alone produces more.
        """
        n = self.num_nodes
        dtype = self.pair_key_dtype
        cards = np.diff(self._edge_indptr)
        tri_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}
        for c in np.unique(cards):
            c = int(c)
            if c < 2:
                continue
            if c not in tri_cache:
                tri_cache[c] = np.triu_indices(c, 1)
            iu, jv = tri_cache[c]
            starts = self._edge_indptr[:-1][cards == c]
            rows_per_block = max(1, block_pairs // len(iu))
            span = np.arange(c, dtype=np.int64)
            for s in range(0, len(starts), rows_per_block):
                idx = starts[s : s + rows_per_block, None] + span[None, :]
                mem = self._members[idx].astype(dtype, copy=False)
                keys = mem[:, iu] * dtype.type(n) + mem[:, jv]
                yield keys.ravel()

    # -- serialisation -----------------------------------------------------

    def to_lines(self) -> Iterator[str]:
        """One hyperedge per line, members as original labels."""
        for e in self.iter_edges():
            yield " ".join(self.labels[v] for v in e)

    def write(self, stream: IO[str]) -> None:
        for line in self.to_lines():
            stream.write(line)
            stream.write("\n")

    def __repr__(self) -> str:
        return f"Hypergraph(num_nodes={self.num_nodes}, num_edges={self.num_edges})"


def parse_hyperedge_list(source: str | IO[str] | Iterable[str], dedup: bool = False) -> Hypergraph:
    """Parse hyperedge-list text: one edge per line, node tokens separated by
    commas and/or whitespace, ``#``-prefixed lines as comments.

    Tokens repeated within a line are deduplicated; identical lines are kept as
    distinct hyperedges unless ``dedup`` is set (some corpus conventions
    collapse duplicate edges, which changes co-occurrence counts).  Labels are
    mapped to dense ids in first-appearance order.
    """
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source
    label_to_id: dict[str, int] = {}
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    for raw in lines:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = [t for t in _TOKEN_SPLIT.split(line) if t]
        if not tokens:
            continue
        ids = []
        for tok in tokens:
            vid = label_to_id.setdefault(tok, len(label_to_id))
            ids.append(vid)
        edge = tuple(sorted(set(ids)))
        if dedup:
            if edge in seen:
                continue
            seen.add(edge)
        edges.append(edge)
    labels = [""] * len(label_to_id)
    for tok, vid in label_to_id.items():
        labels[vid] = tok
    return Hypergraph(edges, num_nodes=len(label_to_id), labels=labels)


def load_hypergraph(path: str, dedup: bool = False) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_hyperedge_list(fh, dedup=dedup)
