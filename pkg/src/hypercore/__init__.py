"""Cohesive-core analytics for hypergraphs.

The central model retains a node when at least k other retained nodes
co-occur with it in at least g hyperedges; the package also ships five
comparison core models, a brute-force oracle, seeded generators and a
benchmark harness.
"""

from .baselines import (
    BaselineParams,
    BaselineResult,
    alpha_beta_core,
    clique_core,
    kd_core,
    kq_core,
    nbr_k_core,
    run_baseline,
)
from .cooccur import CoocGraph, NeighbourOccurrenceMap, build_nom, dump_nom_csv, threshold_graph
from .genbench import GeneratorConfig, ScaleRow, generate_uniform, run_scalability
from .hypergraph import Hypergraph, HypergraphStats, load_hypergraph, parse_hyperedge_list
from .kgcore import (
    CoreParams,
    CoreResult,
    DecompositionGrid,
    GridRow,
    core_components,
    g_coreness,
    kg_core,
    kg_decomposition,
)
from .oracle import brute_force_kg_core, enumerate_kg_core, verify_feasible

__version__ = "0.1.0"

__all__ = [
    "BaselineParams",
    "BaselineResult",
    "CoocGraph",
    "CoreParams",
    "CoreResult",
    "DecompositionGrid",
    "GeneratorConfig",
    "GridRow",
    "Hypergraph",
    "HypergraphStats",
    "NeighbourOccurrenceMap",
    "ScaleRow",
    "alpha_beta_core",
    "brute_force_kg_core",
    "build_nom",
    "clique_core",
    "core_components",
    "dump_nom_csv",
    "enumerate_kg_core",
    "g_coreness",
    "generate_uniform",
    "kd_core",
    "kg_core",
    "kg_decomposition",
    "kq_core",
    "load_hypergraph",
    "nbr_k_core",
    "parse_hyperedge_list",
    "run_baseline",
    "run_scalability",
    "threshold_graph",
    "verify_feasible",
]
