"""Seeded random hypergraph generation and the scalability harness.

The generator draws every hyperedge as an independent uniform random
c-subset of the node universe (members distinct within an edge, duplicate
edges across the list allowed).  A fixed seed fully determines the output.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from statistics import median
from typing import IO, Iterable

import numpy as np

from .cooccur import build_nom, threshold_graph
from .hypergraph import Hypergraph
from .kgcore import _peel_cooc


@dataclass(frozen=True)
class GeneratorConfig:
    num_nodes: int
    num_edges: int
    edge_cardinality: int
    seed: int = 0

    def __post_init__(self):
        if self.num_nodes < 0 or self.num_edges < 0:
            raise ValueError("num_nodes and num_edges must be non-negative")
        if self.edge_cardinality < 1:
            raise ValueError("edge_cardinality must be >= 1")
        if self.edge_cardinality > self.num_nodes:
            raise ValueError(
                f"edge_cardinality {self.edge_cardinality} exceeds num_nodes {self.num_nodes}"
            )


def generate_uniform(cfg: GeneratorConfig) -> Hypergraph:
    """Hypergraph with ``num_edges`` uniform random ``edge_cardinality``-subsets."""
    rng = np.random.default_rng(cfg.seed)
    edges = [
        rng.choice(cfg.num_nodes, size=cfg.edge_cardinality, replace=False)
        for _ in range(cfg.num_edges)
    ]
    return Hypergraph(edges, num_nodes=cfg.num_nodes)


@dataclass
class ScaleRow:
    num_edges: int
    median_millis: float
    core_size: int


def run_scalability(
    num_nodes: int,
    edge_cardinality: int,
    m_values: Iterable[int],
    k: int,
    g: int,
    repeats: int = 3,
    seed: int = 0,
) -> list[ScaleRow]:
    """Time the full core pipeline (count, threshold, peel) per edge count.

    One hypergraph is generated per m value, from a child seed derived from
    ``seed``; the pipeline is timed ``repeats`` times on it and the median
    wall-clock is reported.  Generation itself is not timed.  The core size is
    identical across repeats since the pipeline is deterministic.
    """
    if repeats < 1:
        raise ValueError("repeats must be >= 1")
    rows: list[ScaleRow] = []
    for idx, m in enumerate(m_values):
        child_seed = int(np.random.SeedSequence((seed, idx)).generate_state(1)[0])
        cfg = GeneratorConfig(num_nodes, int(m), edge_cardinality, seed=child_seed)
        G = generate_uniform(cfg)
        times = []
        size = 0
        for _ in range(repeats):
            t0 = time.perf_counter()
            nom = build_nom(G)
            cg = threshold_graph(nom, g)
            members, _ = _peel_cooc(cg, k)
            times.append((time.perf_counter() - t0) * 1000.0)
            size = len(members)
        rows.append(ScaleRow(int(m), float(median(times)), size))
    return rows


def write_scalability_csv(rows: list[ScaleRow], stream: IO[str]) -> None:
    stream.write("m,median_millis,core_size\n")
    for row in rows:
        stream.write(f"{row.num_edges},{row.median_millis:.3f},{row.core_size}\n")
