"""(k,g)-core computation: peeling, parameter-grid decomposition, coreness.

A node belongs to the (k,g)-core when at least k other members co-occur with
it in at least g hyperedges.  Counts always refer to the original edge list
(equivalently, to weakly induced subhypergraphs: intersecting edges with the
surviving set never changes the count of a surviving pair).  The core is
therefore the classical k-core of the co-occurrence graph thresholded at g,
which is how the fast path computes it:

    1. build the neighbour-occurrence map once,
    2. threshold it at g,
    3. repeatedly strip nodes whose degree in that graph falls below k.

The fast path removes violating nodes in waves (all currently violating nodes
at once, then everyone newly violating, and so on); each adjacency entry is
touched at most once overall.  A literal sweep-until-stable transcription of
the same peeling is kept as ``method="naive"``: quadratic, dictionary-based,
and useful as an agreement check and for iteration-order experiments.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

import numpy as np

from .cooccur import CoocGraph, NeighbourOccurrenceMap, build_nom, threshold_graph
from .hypergraph import Hypergraph

THREADS_ENV_VAR = "HYPERCORE_THREADS"


@dataclass(frozen=True)
class CoreParams:
    """Neighbour threshold k and co-occurrence threshold g, both >= 1."""

    k: int
    g: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be >= 1, got {self.k}")
        if self.g < 1:
            raise ValueError(f"g must be >= 1, got {self.g}")


@dataclass
class CoreResult:
    """Core membership plus peel trace metadata.

    ``rounds`` counts the peel sweeps that removed at least one node and
    ``removed_per_round`` holds one count per such sweep.  The member set is
    the unique maximal feasible set; the trace depends on the method used.
    """

    members: list[int]
    params: CoreParams
    rounds: int
    removed_per_round: list[int]

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json_dict(self, labels: Sequence[str] | None = None) -> dict:
        members = [labels[v] for v in self.members] if labels is not None else list(self.members)
        return {
            "k": self.params.k,
            "g": self.params.g,
            "size": self.size,
            "members": members,
            "rounds": self.rounds,
        }


@dataclass
class GridRow:
    k: int
    g: int
    size: int
    millis: float
    members: list[int] | None = None


@dataclass
class DecompositionGrid:
    """Core sizes over a (k, g) parameter grid, rows sorted by (k, g)."""

    rows: list[GridRow] = field(default_factory=list)

    def size_of(self, k: int, g: int) -> int:
        for row in self.rows:
            if row.k == k and row.g == g:
                return row.size
        raise KeyError((k, g))

    def write_csv(self, stream: IO[str]) -> None:
        stream.write("k,g,size,millis\n")
        for row in self.rows:
            stream.write(f"{row.k},{row.g},{row.size},{row.millis:.3f}\n")


def _peel_cooc(cg: CoocGraph, k: int) -> tuple[np.ndarray, list[int]]:
    """k-core of a co-occurrence graph by cascading wave removal.

    Every wave removes all nodes currently below degree k (ascending node id
    within the wave), then decrements the degrees of their surviving
    neighbours; the next wave is whatever dropped below k.  The surviving set
    is the unique maximal fixpoint regardless of this ordering.
    """
    n = cg.num_nodes
    alive = np.ones(n, dtype=bool)
    deg = cg.degrees().copy()
    removed_per_round: list[int] = []
    wave = np.flatnonzero(deg < k)
    while wave.size:
        removed_per_round.append(int(wave.size))
        alive[wave] = False
        segments = [cg.nbrs[cg.indptr[v] : cg.indptr[v + 1]] for v in wave]
        if segments:
            touched = np.concatenate(segments)
            touched = touched[alive[touched]]
            if touched.size:
                deg -= np.bincount(touched, minlength=n)
        wave = np.flatnonzero(alive & (deg < k))
    return np.flatnonzero(alive), removed_per_round


def _peel_naive(
    G: Hypergraph, k: int, g: int, order: Sequence[int] | None = None
) -> tuple[set[int], list[int]]:
    """Sweep-until-stable peeling over per-node occurrence dictionaries.

    Builds the occurrence map per node from its incident edges, keeps entries
    with count >= g, then sweeps over nodes removing any with fewer than k
    surviving entries until a full sweep removes nothing.  Removal order
    within a sweep follows ``order`` (default: ascending id); the final set is
    order invariant.
    """
    n = G.num_nodes
    sweep_order = list(order) if order is not None else list(range(n))
    if sorted(sweep_order) != list(range(n)):
        raise ValueError("order must be a permutation of all node ids")
    nom: list[dict[int, int]] = [dict() for _ in range(n)]
    for v in range(n):
        occ = nom[v]
        for j in G.incident_edges(v):
            for u in G.edge_members(j):
                if u != v:
                    occ[u] = occ.get(u, 0) + 1
    for v in range(n):
        nom[v] = {u: c for u, c in nom[v].items() if c >= g}
    alive = set(range(n))
    removed_per_round: list[int] = []
    changed = True
    while changed:
        changed = False
        removed_this_sweep = 0
        for w in sweep_order:
            if w in alive and len(nom[w]) < k:
                alive.discard(w)
                for u in nom[w]:
                    del nom[u][w]
                nom[w] = {}
                removed_this_sweep += 1
                changed = True
        if removed_this_sweep:
            removed_per_round.append(removed_this_sweep)
    return alive, removed_per_round


def kg_core(
    G: Hypergraph,
    k: int,
    g: int,
    method: str = "bucket",
    nom: NeighbourOccurrenceMap | None = None,
    order: Sequence[int] | None = None,
) -> CoreResult:
    """The unique maximal node set where every member has at least k
    neighbours co-occurring with it in at least g hyperedges.

    ``method="bucket"`` thresholds the (optionally prebuilt) occurrence map
    and peels the resulting graph in waves; ``method="naive"`` runs the
    self-contained sweep transcription (which also accepts a node iteration
    ``order``).  Both produce the identical member set.  Thresholds beyond
    anything attainable yield an empty result, not an error.
    """
    params = CoreParams(k, g)
    if method == "naive":
        alive, removed = _peel_naive(G, k, g, order=order)
        return CoreResult(sorted(alive), params, len(removed), removed)
    if method != "bucket":
        raise ValueError(f"method must be 'bucket' or 'naive', got {method!r}")
    if order is not None:
        raise ValueError("order is only meaningful for the naive method")
    if G.num_nodes == 0:
        return CoreResult([], params, 0, [])
    if nom is None:
        nom = build_nom(G)
    cg = threshold_graph(nom, g)
    members, removed = _peel_cooc(cg, k)
    return CoreResult([int(v) for v in members], params, len(removed), removed)


def _grid_rows_for_g(
    nom: NeighbourOccurrenceMap, g: int, k_values: list[int], record_members: bool
) -> list[GridRow]:
    # the threshold graph is built for the first k and shared by the rest,
    # then freed; its build time is charged to that first row
    rows = []
    cg: CoocGraph | None = None
    for i, k in enumerate(k_values):
        t0 = time.perf_counter()
        if i == 0:
            cg = threshold_graph(nom, g)
        assert cg is not None
        members, _ = _peel_cooc(cg, k)
        millis = (time.perf_counter() - t0) * 1000.0
        rows.append(
            GridRow(k, g, len(members), millis, [int(v) for v in members] if record_members else None)
        )
    return rows


def kg_decomposition(
    G: Hypergraph,
    k_values: Iterable[int],
    g_values: Iterable[int],
    record_members: bool = False,
    max_workers: int | None = None,
) -> DecompositionGrid:
    """Core size for every (k, g) combination of the given values.

    The occurrence map is built once and shared; each g value is thresholded
    once and peeled for every k.  Distinct g values may be evaluated on
    parallel worker threads (``max_workers``, defaulting to the
    HYPERCORE_THREADS environment variable); row order is (k, g) sorted either
    way.  Sizes are non-increasing along both parameter axes.
    """
    ks = sorted(set(int(k) for k in k_values))
    gs = sorted(set(int(g) for g in g_values))
    if any(k < 1 for k in ks) or any(g < 1 for g in gs):
        raise ValueError("all k and g values must be >= 1")
    grid = DecompositionGrid()
    if not ks or not gs or G.num_nodes == 0:
        grid.rows = [GridRow(k, g, 0, 0.0, [] if record_members else None) for k in ks for g in gs]
        return grid
    nom = build_nom(G)
    if max_workers is None:
        max_workers = int(os.environ.get(THREADS_ENV_VAR, "1") or "1")
    max_workers = max(1, min(max_workers, len(gs)))
    if max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            per_g = pool.map(lambda g: _grid_rows_for_g(nom, g, ks, record_members), gs)
            for rows in per_g:
                grid.rows.extend(rows)
    else:
        for g in gs:
            grid.rows.extend(_grid_rows_for_g(nom, g, ks, record_members))
    grid.rows.sort(key=lambda r: (r.k, r.g))
    return grid


def g_coreness(G: Hypergraph, g: int, nom: NeighbourOccurrenceMap | None = None) -> np.ndarray:
    """For fixed g, the largest k placing each node in the (k,g)-core.

    Classical bin-bucket peeling over the thresholded co-occurrence graph:
    nodes are processed in ascending degree order and every neighbour of the
    processed node with a larger current degree is pulled down one bucket.
    Nodes with no g-frequent partner get 0.
    """
    if g < 1:
        raise ValueError(f"g must be >= 1, got {g}")
    n = G.num_nodes
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if nom is None:
        nom = build_nom(G)
    cg = threshold_graph(nom, g)
    deg = cg.degrees().astype(np.int64)
    max_deg = int(deg.max()) if n else 0
    bin_start = np.zeros(max_deg + 2, dtype=np.int64)
    np.cumsum(np.bincount(deg, minlength=max_deg + 1), out=bin_start[1:])
    vert = np.argsort(deg, kind="stable")
    pos = np.empty(n, dtype=np.int64)
    pos[vert] = np.arange(n)
    bin_ptr = bin_start[:-1].copy()
    nbrs, indptr = cg.nbrs, cg.indptr
    for i in range(n):
        v = int(vert[i])
        dv = deg[v]
        for u in nbrs[indptr[v] : indptr[v + 1]]:
            u = int(u)
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bin_ptr[du]
                w = int(vert[pw])
                if u != w:
                    vert[pu], vert[pw] = w, u
                    pos[u], pos[w] = pw, pu
                bin_ptr[du] += 1
                deg[u] = du - 1
    return deg


def core_components(G: Hypergraph, result: CoreResult, nom: NeighbourOccurrenceMap | None = None) -> list[list[int]]:
    """Split core members into connected components of the thresholded
    co-occurrence graph restricted to the members.

    The core itself carries no connectivity guarantee; this post-filter is for
    callers who want connected clusters.  Components are sorted by their
    smallest member id, members ascending within each.
    """
    if nom is None:
        nom = build_nom(G)
    cg = threshold_graph(nom, result.params.g)
    members = set(result.members)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in result.members:
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            v = stack.pop()
            for u in cg.nbrs[cg.indptr[v] : cg.indptr[v + 1]]:
                u = int(u)
                if u in members and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        components.append(sorted(comp))
    return components
