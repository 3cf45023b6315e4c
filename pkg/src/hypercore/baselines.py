"""Reference implementations of five comparison core models for hypergraphs.

All five are fixpoints of monotone deletion and therefore unique; the
implementations recompute constraints each round and delete every violator at
once, which keeps them order free.  They exist for side-by-side studies and
cross-checks, not for speed.

Semantics at a glance (S = surviving nodes, F = surviving edges):

* kq:          degree of every node in S over F is >= k, and every edge in F
               has >= q members in S; both sides cascade.
* nbr_k:       every node in S has >= k distinct neighbours, counted only over
               edges entirely contained in S (strongly induced).
* kd:          nbr_k plus a degree constraint (>= d incident edges entirely
               contained in S).
* clique:      classical k-core of the clique expansion.
* alpha_beta:  peeling of the node/edge incidence bipartite graph; node side
               needs >= alpha incidences, edge side >= beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .hypergraph import Hypergraph

MODELS = ("kq", "nbr_k", "kd", "clique", "alpha_beta")
_TWO_PARAM_MODELS = ("kq", "kd", "alpha_beta")

# parameter names per model, in (first, second) order
PARAM_NAMES = {
    "kq": ("k", "q"),
    "nbr_k": ("k", None),
    "kd": ("k", "d"),
    "clique": ("k", None),
    "alpha_beta": ("alpha", "beta"),
}


@dataclass(frozen=True)
class BaselineParams:
    model: str
    first: int
    second: int | None = None

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.first < 1:
            raise ValueError(f"first parameter must be >= 1, got {self.first}")
        needs_second = self.model in _TWO_PARAM_MODELS
        if needs_second and self.second is None:
            raise ValueError(f"model {self.model!r} needs a second parameter")
        if not needs_second and self.second is not None:
            raise ValueError(f"model {self.model!r} takes no second parameter")
        if self.second is not None and self.second < 1:
            raise ValueError(f"second parameter must be >= 1, got {self.second}")


@dataclass
class BaselineResult:
    params: BaselineParams
    members: list[int]
    edge_ids: list[int] | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    def to_json_dict(self, labels: Sequence[str] | None = None, G: Hypergraph | None = None) -> dict:
        first_name, second_name = PARAM_NAMES[self.params.model]
        out: dict = {"model": self.params.model, first_name: self.params.first}
        if second_name is not None:
            out[second_name] = self.params.second
        members = [labels[v] for v in self.members] if labels is not None else list(self.members)
        out["size"] = self.size
        out["members"] = members
        if self.edge_ids is not None:
            out["num_edges"] = len(self.edge_ids)
            if G is not None:
                out["edges"] = [
                    [labels[v] if labels is not None else v for v in G.edge_members(j)]
                    for j in self.edge_ids
                ]
        return out


def _check_params(*values: int) -> None:
    for value in values:
        if value < 1:
            raise ValueError(f"parameters must be >= 1, got {value}")


def kq_core(G: Hypergraph, k: int, q: int) -> tuple[list[int], list[int]]:
    """Fixpoint of deleting nodes with degree < k over surviving edges and
    edges with fewer than q surviving members."""
    _check_params(k, q)
    nodes = set(range(G.num_nodes))
    edges = set(range(G.num_edges))
    while True:
        bad_nodes = {
            v for v in nodes if sum(1 for j in G.incident_edges(v) if j in edges) < k
        }
        nodes -= bad_nodes
        bad_edges = {
            j for j in edges if sum(1 for v in G.edge_members(j) if v in nodes) < q
        }
        edges -= bad_edges
        if not bad_nodes and not bad_edges:
            return sorted(nodes), sorted(edges)


def _strong_edges(G: Hypergraph, nodes: set[int]) -> list[int]:
    return [j for j in range(G.num_edges) if all(v in nodes for v in G.edge_members(j))]


def nbr_k_core(G: Hypergraph, k: int) -> list[int]:
    """Fixpoint of deleting nodes with fewer than k distinct neighbours in the
    strongly induced subhypergraph of the survivors."""
    _check_params(k)
    nodes = set(range(G.num_nodes))
    while True:
        alive_edges = _strong_edges(G, nodes)
        nbrs: dict[int, set[int]] = {v: set() for v in nodes}
        for j in alive_edges:
            members = G.edge_members(j)
            for v in members:
                nbrs[v].update(members)
        bad = {v for v in nodes if len(nbrs[v] - {v}) < k}
        if not bad:
            return sorted(nodes)
        nodes -= bad


def kd_core(G: Hypergraph, k: int, d: int) -> list[int]:
    """nbr_k constraint plus degree >= d, both in the strongly induced
    subhypergraph of the survivors."""
    _check_params(k, d)
    nodes = set(range(G.num_nodes))
    while True:
        alive_edges = _strong_edges(G, nodes)
        nbrs: dict[int, set[int]] = {v: set() for v in nodes}
        deg: dict[int, int] = {v: 0 for v in nodes}
        for j in alive_edges:
            members = G.edge_members(j)
            for v in members:
                nbrs[v].update(members)
                deg[v] += 1
        bad = {v for v in nodes if len(nbrs[v] - {v}) < k or deg[v] < d}
        if not bad:
            return sorted(nodes)
        nodes -= bad


def clique_core(G: Hypergraph, k: int) -> list[int]:
    """Classical k-core of the clique expansion (one simple edge per node pair
    sharing any hyperedge).

    Kept independent of the co-occurrence counting machinery on purpose: this
    must coincide with the frequency-threshold core at g=1, and an independent
    route makes that a meaningful check.
    """
    _check_params(k)
    adj: dict[int, set[int]] = {v: set() for v in range(G.num_nodes)}
    for e in G.iter_edges():
        for u, v in combinations(e, 2):
            adj[u].add(v)
            adj[v].add(u)
    alive = set(range(G.num_nodes))
    queue = [v for v in alive if len(adj[v]) < k]
    for v in queue:
        alive.discard(v)
    while queue:
        v = queue.pop()
        for u in adj[v]:
            if u in alive:
                adj[u].discard(v)
                if len(adj[u]) < k:
                    alive.discard(u)
                    queue.append(u)
    return sorted(alive)


def alpha_beta_core(G: Hypergraph, alpha: int, beta: int) -> tuple[list[int], list[int]]:
    """Peeling of the incidence bipartite graph: node vertices need >= alpha
    surviving incidences, hyperedge vertices >= beta."""
    _check_params(alpha, beta)
    nodes = set(range(G.num_nodes))
    edges = set(range(G.num_edges))
    while True:
        bad_nodes = {
            v for v in nodes if sum(1 for j in G.incident_edges(v) if j in edges) < alpha
        }
        bad_edges = {
            j for j in edges if sum(1 for v in G.edge_members(j) if v in nodes) < beta
        }
        if not bad_nodes and not bad_edges:
            return sorted(nodes), sorted(edges)
        nodes -= bad_nodes
        edges -= bad_edges


def run_baseline(G: Hypergraph, params: BaselineParams) -> BaselineResult:
    if params.model == "kq":
        members, edge_ids = kq_core(G, params.first, params.second)
        return BaselineResult(params, members, edge_ids)
    if params.model == "nbr_k":
        return BaselineResult(params, nbr_k_core(G, params.first))
    if params.model == "kd":
        return BaselineResult(params, kd_core(G, params.first, params.second))
    if params.model == "clique":
        return BaselineResult(params, clique_core(G, params.first))
    members, edge_ids = alpha_beta_core(G, params.first, params.second)
    return BaselineResult(params, members, edge_ids)
