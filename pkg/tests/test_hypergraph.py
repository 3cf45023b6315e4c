from __future__ import annotations

import io
import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hypercore import Hypergraph, parse_hyperedge_list

from helpers import brute_force_neighbours, random_instance


def edge_label_multiset(G: Hypergraph) -> list[tuple[str, ...]]:
    return sorted(tuple(sorted(G.labels[v] for v in e)) for e in G.iter_edges())


@st.composite
def hypergraphs(draw, max_nodes=12, max_edges=20, max_card=5):
    n = draw(st.integers(1, max_nodes))
    edges = draw(
        st.lists(
            st.lists(st.integers(0, n - 1), min_size=1, max_size=max_card),
            max_size=max_edges,
        )
    )
    return Hypergraph(edges, num_nodes=n)


class TestParsing:
    def test_whitespace_and_comma_tokens(self):
        G = parse_hyperedge_list("1 2 3\n1,2\n")
        assert G.num_nodes == 3
        assert G.num_edges == 2
        assert G.edge_list() == [(0, 1, 2), (0, 1)]

    def test_duplicate_tokens_within_line_deduplicated(self):
        G = parse_hyperedge_list("a a b\n")
        assert G.num_edges == 1
        assert G.edge_list() == [(0, 1)]

    def test_duplicate_lines_kept_as_distinct_edges(self):
        G = parse_hyperedge_list("1 2\n1 2\n")
        assert G.num_edges == 2
        assert G.edge_list() == [(0, 1), (0, 1)]

    def test_dedup_flag_collapses_identical_edges(self):
        G = parse_hyperedge_list("1 2\n2 1\n1 3\n", dedup=True)
        assert G.num_edges == 2
        assert G.edge_list() == [(0, 1), (0, 2)]

    def test_comments_blanks_and_stray_separators(self):
        text = "# header\n\n1,,2\n  \n# trailing\n3 , 4\n"
        G = parse_hyperedge_list(text)
        assert G.num_edges == 2
        assert G.edge_list() == [(0, 1), (2, 3)]

    def test_zero_hyperedges_is_valid(self):
        G = parse_hyperedge_list("# nothing here\n")
        assert G.num_nodes == 0
        assert G.num_edges == 0

    def test_labels_first_appearance_order(self):
        G = parse_hyperedge_list("x y\nz x\n")
        assert G.labels == ["x", "y", "z"]
        assert {G.label(v): v for v in G.nodes()} == {"x": 0, "y": 1, "z": 2}

    def test_label_id_bijection(self):
        G = parse_hyperedge_list("p q\nq r\nr p\n")
        assert len(set(G.labels)) == G.num_nodes


class TestQueries:
    def test_degree_counts_incidences(self):
        G = parse_hyperedge_list("a b c\na b\na\n")
        assert G.degree(0) == 3

    def test_degree_out_of_range(self):
        G = parse_hyperedge_list("")
        with pytest.raises(ValueError):
            G.degree(0)

    def test_degree_duplicate_edges_count_separately(self):
        G = parse_hyperedge_list("a b\na b\n")
        assert G.degree(0) == 2

    def test_neighbours_union_of_comembers(self, path_graph):
        c = 2
        assert path_graph.neighbours(c) == {0, 1, 3}

    def test_neighbours_singleton_edge(self):
        G = parse_hyperedge_list("a\n")
        assert G.neighbours(0) == set()

    def test_neighbours_is_a_set_not_multiset(self):
        G = parse_hyperedge_list("a b\na b\n")
        assert G.neighbours(0) == {1}

    def test_neighbours_out_of_range(self):
        G = parse_hyperedge_list("a b\n")
        with pytest.raises(ValueError):
            G.neighbours(5)


class TestInduced:
    def test_strong_keeps_only_contained_edges(self):
        G = parse_hyperedge_list("a b c\na b\n")
        H = G.induced_subhypergraph({0, 1}, mode="strong")
        assert H.edge_list() == [(0, 1)]

    def test_weak_intersects_each_edge(self):
        G = parse_hyperedge_list("a b c\na b\n")
        H = G.induced_subhypergraph({0, 1}, mode="weak")
        assert H.edge_list() == [(0, 1), (0, 1)]

    @pytest.mark.parametrize("mode", ["weak", "strong"])
    def test_full_node_set_is_identity(self, toy4, mode):
        H = toy4.induced_subhypergraph(set(toy4.nodes()), mode=mode)
        assert H.edge_list() == toy4.edge_list()

    def test_bad_mode_rejected(self, toy4):
        with pytest.raises(ValueError):
            toy4.induced_subhypergraph({0}, mode="both")

    def test_weak_drops_emptied_edges(self):
        G = parse_hyperedge_list("a b\nc d\n")
        H = G.induced_subhypergraph({0, 1}, mode="weak")
        assert H.num_edges == 1


class TestStats:
    def test_single_pair(self):
        G = parse_hyperedge_list("a b\n")
        s = G.stats()
        assert s.avg_neighbour_size == 1.0
        assert s.avg_edge_cardinality == 2.0

    def test_mixed_example(self, path_graph):
        s = path_graph.stats()
        assert s.avg_edge_cardinality == 2.5
        assert s.avg_neighbour_size == pytest.approx((2 + 2 + 3 + 1) / 4)

    def test_empty_graph_zeros(self):
        s = parse_hyperedge_list("").stats()
        assert (s.num_nodes, s.num_edges) == (0, 0)
        assert s.avg_neighbour_size == 0.0
        assert s.avg_edge_cardinality == 0.0

    def test_json_field_names(self, toy4):
        payload = json.loads(toy4.stats().to_json())
        assert set(payload) == {
            "num_nodes",
            "num_edges",
            "avg_neighbour_size",
            "avg_edge_cardinality",
        }

    @given(hypergraphs())
    @settings(max_examples=60)
    def test_avg_neighbour_matches_per_node_enumeration(self, G):
        expected = sum(len(G.neighbours(v)) for v in G.nodes()) / G.num_nodes
        assert G.stats().avg_neighbour_size == pytest.approx(expected)

    @given(hypergraphs())
    @settings(max_examples=30)
    def test_neighbour_bound(self, G):
        s = G.stats()
        assert s.avg_neighbour_size <= G.num_nodes - 1 or G.num_nodes == 0


class TestInvariants:
    @given(hypergraphs(max_nodes=50, max_edges=30))
    @settings(max_examples=60)
    def test_neighbours_match_edge_scan(self, G):
        for v in G.nodes():
            assert G.neighbours(v) == brute_force_neighbours(G, v)

    @given(hypergraphs())
    @settings(max_examples=60)
    def test_incidence_consistency(self, G):
        assert sum(G.degree(v) for v in G.nodes()) == sum(len(e) for e in G.iter_edges())
        for v in G.nodes():
            for j in G.incident_edges(v):
                assert v in G.edge_members(j)

    def test_incidence_consistency_after_induction(self, toy4):
        H = toy4.induced_subhypergraph({0, 1, 2}, mode="weak")
        assert sum(H.degree(v) for v in H.nodes()) == sum(len(e) for e in H.iter_edges())

    @given(hypergraphs())
    @settings(max_examples=60)
    def test_round_trip(self, G):
        buf = io.StringIO()
        G.write(buf)
        H = parse_hyperedge_list(buf.getvalue())
        assert edge_label_multiset(G) == edge_label_multiset(H)

    def test_round_trip_seeded_instances(self):
        rng = np.random.default_rng(11)
        for _ in range(50):
            G = random_instance(rng, max_nodes=20, max_edges=25, max_card=6)
            buf = io.StringIO()
            G.write(buf)
            H = parse_hyperedge_list(buf.getvalue())
            assert edge_label_multiset(G) == edge_label_multiset(H)

    def test_members_sorted_and_distinct(self):
        G = Hypergraph([[3, 1, 2, 1]])
        assert G.edge_list() == [(1, 2, 3)]


class TestConstruction:
    def test_empty_edge_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph([[]])

    def test_negative_id_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph([[-1, 2]])

    def test_id_beyond_universe_rejected(self):
        with pytest.raises(ValueError):
            Hypergraph([[0, 5]], num_nodes=3)

    def test_labels_length_checked(self):
        with pytest.raises(ValueError):
            Hypergraph([[0, 1]], num_nodes=2, labels=["only-one"])

    def test_default_labels_are_ids(self):
        G = Hypergraph([[0, 2]], num_nodes=3)
        assert G.labels == ["0", "1", "2"]
