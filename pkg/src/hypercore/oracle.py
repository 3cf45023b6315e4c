"""Brute-force reference implementations for core correctness checks.

Everything here is deliberately independent of the counting and peeling
modules: pair frequencies are recounted from the raw edge list on every round,
with plain dicts and sets.  Slow by design, usable only on toy instances, and
exactly what the property tests need as a second opinion.
"""

from __future__ import annotations

from itertools import combinations

from .hypergraph import Hypergraph

MAX_ORACLE_NODES = 20
MAX_ENUM_NODES = 16


def _pair_counts_within(G: Hypergraph, alive: set[int]) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    for e in G.iter_edges():
        surviving = sorted(v for v in e if v in alive)
        for pair in combinations(surviving, 2):
            counts[pair] = counts.get(pair, 0) + 1
    return counts


def _frequent_partner_counts(G: Hypergraph, alive: set[int], g: int) -> dict[int, int]:
    partners: dict[int, int] = {v: 0 for v in alive}
    for (u, v), c in _pair_counts_within(G, alive).items():
        if c >= g:
            partners[u] += 1
            partners[v] += 1
    return partners


def verify_feasible(G: Hypergraph, nodes: set[int], k: int, g: int) -> bool:
    """True iff every node of the set has at least k partners in the set that
    co-occur with it in at least g original hyperedges.  Vacuously true for
    the empty set."""
    if k < 1 or g < 1:
        raise ValueError("k and g must be >= 1")
    alive = set(nodes)
    return all(c >= k for c in _frequent_partner_counts(G, alive, g).values())


def brute_force_kg_core(G: Hypergraph, k: int, g: int, cross_check: bool = False) -> set[int]:
    """Maximal feasible node set by simultaneous deletion until fixpoint.

    Starts from all nodes and repeatedly deletes, in one go, every node that
    currently lacks k frequent partners; pair frequencies are recounted from
    the edge list each round.  With ``cross_check`` (small instances only) the
    result is compared against the union of all feasible subsets found by
    exhaustive enumeration, which must coincide.
    """
    if k < 1 or g < 1:
        raise ValueError("k and g must be >= 1")
    if G.num_nodes > MAX_ORACLE_NODES:
        raise ValueError(f"oracle refuses instances with more than {MAX_ORACLE_NODES} nodes")
    alive = set(range(G.num_nodes))
    while alive:
        partner = _frequent_partner_counts(G, alive, g)
        violating = {v for v in alive if partner[v] < k}
        if not violating:
            break
        alive -= violating
    if cross_check and G.num_nodes <= 12:
        enumerated = enumerate_kg_core(G, k, g)
        if enumerated != alive:
            raise AssertionError(
                f"fixpoint {sorted(alive)} != enumeration union {sorted(enumerated)} (k={k}, g={g})"
            )
    return alive


def enumerate_kg_core(G: Hypergraph, k: int, g: int) -> set[int]:
    """Union of every feasible subset, by checking all 2^n node subsets.

    Subsets are bitmasks; feasibility of a mask needs only the per-node mask
    of g-frequent partners, so each check is a handful of popcounts.
    """
    if k < 1 or g < 1:
        raise ValueError("k and g must be >= 1")
    n = G.num_nodes
    if n > MAX_ENUM_NODES:
        raise ValueError(f"enumeration refuses instances with more than {MAX_ENUM_NODES} nodes")
    partner_mask = [0] * n
    for (u, v), c in _pair_counts_within(G, set(range(n))).items():
        if c >= g:
            partner_mask[u] |= 1 << v
            partner_mask[v] |= 1 << u
    union = 0
    for mask in range(1 << n):
        if mask & union == mask:
            continue
        feasible = True
        rest = mask
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            if (partner_mask[v] & mask).bit_count() < k:
                feasible = False
                break
            rest ^= low
        if feasible:
            union |= mask
    return {v for v in range(n) if union >> v & 1}
