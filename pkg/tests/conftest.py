from __future__ import annotations

import pytest

from hypercore import Hypergraph, parse_hyperedge_list


@pytest.fixture
def toy4() -> Hypergraph:
    """Four nodes a..d, edges {a,b,c} x2, {a,b,d}, {c,d}."""
    return parse_hyperedge_list("a b c\na b c\na b d\nc d\n")


@pytest.fixture
def path_graph() -> Hypergraph:
    """Triangle {a,b,c} plus pendant edge {c,d}."""
    return parse_hyperedge_list("a b c\nc d\n")
