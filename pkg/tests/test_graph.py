import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockspectra import (
    block_decomposition,
    block_graph_vertex_connectivity,
    block_path,
    block_starlike,
    build_graph,
    center,
    coalesce,
    complete_graph,
    delete_vertex_components,
    distance,
    induced_subgraph,
    is_block_graph,
    is_connected,
    path_graph,
    star_graph,
    true_twin_partition,
)
from _util import articulation_oracle, clique_tree, prufer_tree, to_networkx

clique_trees = st.builds(
    clique_tree,
    st.lists(st.integers(2, 5), min_size=1, max_size=4),
    st.lists(st.integers(0, 100), min_size=3, max_size=3),
)


@st.composite
def connected_graphs(draw):
    n = draw(st.integers(2, 9))
    seq = [draw(st.integers(1, n)) for _ in range(n - 2)]
    tree = prufer_tree(n, seq)
    edges = set(tree.edges)
    for _ in range(draw(st.integers(0, 5))):
        u = draw(st.integers(1, n))
        v = draw(st.integers(1, n))
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


class TestBuildGraph:
    def test_k2(self):
        g = build_graph(2, [(1, 2)])
        assert g.n == 2 and g.edges == ((1, 2),) and g.weights == (1.0,)

    def test_k3(self):
        g = build_graph(3, [(1, 2), (2, 3), (1, 3)])
        assert g.m == 3
        assert g.degree(2) == 2

    def test_self_loop_rejected(self):
        with pytest.raises(ValueError, match="self-loop"):
            build_graph(3, [(1, 1)])

    def test_duplicate_rejected(self):
        with pytest.raises(ValueError, match="duplicate"):
            build_graph(3, [(1, 2), (2, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="out of range"):
            build_graph(3, [(1, 4)])

    def test_non_positive_weight_rejected(self):
        with pytest.raises(ValueError, match="non-positive weight"):
            build_graph(2, [(1, 2)], {(1, 2): 0.0})

    def test_weight_on_non_edge_rejected(self):
        with pytest.raises(ValueError, match="non-edge"):
            build_graph(3, [(1, 2)], {(2, 3): 1.0})

    def test_weights_default_and_lookup(self):
        g = build_graph(3, [(1, 2), (2, 3)], {(3, 2): 2.5})
        assert g.weight(1, 2) == 1.0
        assert g.weight(2, 3) == 2.5
        assert g.weight(3, 2) == 2.5


class TestBlockDecomposition:
    def test_single_clique(self):
        dec = block_decomposition(complete_graph(4))
        assert dec.blocks == ((1, 2, 3, 4),)
        assert dec.articulation_points == ()

    def test_short_path(self):
        dec = block_decomposition(path_graph(3))
        assert dec.blocks == ((1, 2), (2, 3))
        assert dec.articulation_points == (2,)

    def test_clique_chain_4_3(self):
        g = block_path(4, 3)
        dec = block_decomposition(g)
        assert len(dec.blocks) == 4
        assert all(len(b) == 4 for b in dec.blocks)
        assert dec.articulation_points == (4, 7, 10)
        assert set(dec.articulation_points) == articulation_oracle(g)

    def test_single_vertex(self):
        dec = block_decomposition(build_graph(1, []))
        assert dec.blocks == ((1,),)

    def test_disconnected_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            block_decomposition(build_graph(4, [(1, 2), (3, 4)]))

    @settings(max_examples=50, deadline=None)
    @given(connected_graphs())
    def test_every_edge_in_exactly_one_block(self, g):
        dec = block_decomposition(g)
        for u, v in g.edges:
            holders = [
                b for b in dec.blocks if u in b and v in b
            ]
            assert len(holders) >= 1
        # edges partition across blocks: block-internal edge counts sum to m
        total = 0
        for b in dec.blocks:
            inside = {(u, v) for u, v in g.edges if u in b and v in b}
            total += len(inside)
        assert total == g.m

    @settings(max_examples=50, deadline=None)
    @given(connected_graphs())
    def test_articulation_points_match_deletion_oracle(self, g):
        dec = block_decomposition(g)
        assert set(dec.articulation_points) == articulation_oracle(g)
        for v in dec.articulation_points:
            assert len(delete_vertex_components(g, v)) >= 2

    @settings(max_examples=50, deadline=None)
    @given(connected_graphs())
    def test_vertex_is_articulation_iff_in_two_blocks(self, g):
        dec = block_decomposition(g)
        for v in g.vertices():
            in_blocks = len(dec.blocks_containing(v))
            if v in dec.articulation_points:
                assert in_blocks >= 2
            else:
                assert in_blocks == 1 or g.n == 1

    @settings(max_examples=50, deadline=None)
    @given(connected_graphs())
    def test_block_cut_tree_is_connected_and_acyclic(self, g):
        dec = block_decomposition(g)
        tree = nx.Graph()
        tree.add_nodes_from(f"b{i}" for i in range(len(dec.blocks)))
        tree.add_nodes_from(f"a{v}" for v in dec.articulation_points)
        tree.add_edges_from((f"b{i}", f"a{v}") for i, v in dec.tree_edges)
        assert nx.is_connected(tree)
        assert nx.is_forest(tree)


class TestIsBlockGraph:
    def test_trees_are_block_graphs(self):
        assert is_block_graph(path_graph(6))
        assert is_block_graph(star_graph(4))

    def test_cycle_is_not(self):
        assert not is_block_graph(build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)]))

    def test_starlike_member(self):
        assert is_block_graph(block_starlike(3, 4, [3, 2, 1]))


class TestTrueTwins:
    def test_triangle_single_class(self):
        assert true_twin_partition(complete_graph(3)).classes == ((1, 2, 3),)

    def test_path_singletons(self):
        assert true_twin_partition(path_graph(3)).classes == ((1,), (2,), (3,))

    def test_two_cliques_sharing_a_vertex(self):
        g = block_path(4, 1)
        part = true_twin_partition(g)
        assert part.classes == ((1, 2, 3), (4,), (5, 6, 7))
        # brute-force closed neighborhood comparison
        for cls in part.classes:
            for a in cls:
                for b in cls:
                    assert g.closed_neighborhood(a) == g.closed_neighborhood(b)

    @settings(max_examples=40, deadline=None)
    @given(clique_trees)
    def test_twin_classes_stay_inside_one_block(self, g):
        dec = block_decomposition(g)
        for cls in true_twin_partition(g).classes:
            if len(cls) < 2:
                continue
            holders = [b for b in dec.blocks if set(cls) <= set(b)]
            assert holders, f"twin class {cls} straddles blocks"


class TestMetric:
    def test_path_distance(self):
        assert distance(path_graph(3), 1, 3) == 2

    def test_clique_distance(self):
        assert distance(complete_graph(4), 1, 3) == 1

    def test_chain_end_to_end(self):
        g = block_path(4, 3)
        assert distance(g, 1, 13) == 4
        assert distance(g, 1, 13) == nx.shortest_path_length(to_networkx(g), 1, 13)

    def test_center_of_path(self):
        assert center(path_graph(3)) == (2,)

    def test_center_of_odd_chain(self):
        assert center(block_path(4, 3)) == (7,)

    def test_center_of_unequal_starlike(self):
        # the hub ties with its clique-mates toward the longest arm
        g = block_starlike(3, 4, [3, 2, 1])
        ecc = nx.eccentricity(to_networkx(g))
        best = min(ecc.values())
        expected = tuple(sorted(v for v, e in ecc.items() if e == best))
        assert center(g) == expected
        assert center(g) == (1, 2, 3, 4)
        assert 1 in center(g)


class TestDeleteVertexComponents:
    def test_path_middle(self):
        assert delete_vertex_components(path_graph(3), 2) == [(1,), (3,)]

    def test_clique_any(self):
        assert delete_vertex_components(complete_graph(4), 1) == [(2, 3, 4)]

    def test_chain_center(self):
        comps = delete_vertex_components(block_path(4, 3), 7)
        assert [len(c) for c in comps] == [6, 6]
        assert comps[0] == (1, 2, 3, 4, 5, 6)
        assert comps[1] == (8, 9, 10, 11, 12, 13)


class TestCoalesce:
    def test_two_edges_make_a_path(self):
        g = coalesce(complete_graph(2), 2, complete_graph(2), 1)
        assert g.edges == ((1, 2), (2, 3))

    def test_counts_and_identified_degree(self):
        g = block_path(4, 3)
        h = complete_graph(4)
        merged = coalesce(g, 7, h, 1)
        assert merged.n == g.n + h.n - 1 == 16
        assert merged.degree(7) == g.degree(7) + h.degree(1)

    def test_chain_glue_is_isomorphic_to_longer_chain(self):
        a = block_path(3, 1)
        b = block_path(3, 1)
        merged = coalesce(a, a.n, b, 1)
        assert nx.is_isomorphic(to_networkx(merged), to_networkx(block_path(3, 3)))

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="out of range"):
            coalesce(complete_graph(2), 5, complete_graph(2), 1)

    @settings(max_examples=40, deadline=None)
    @given(clique_trees, clique_trees, st.integers(0, 100), st.integers(0, 100))
    def test_coalesce_invariants(self, g, h, pick_u, pick_w):
        u = 1 + pick_u % g.n
        w = 1 + pick_w % h.n
        merged = coalesce(g, u, h, w)
        assert merged.n == g.n + h.n - 1
        assert merged.m == g.m + h.m
        assert merged.degree(u) == g.degree(u) + h.degree(w)
        assert is_connected(merged)


class TestVertexConnectivity:
    def test_single_clique(self):
        assert block_graph_vertex_connectivity(complete_graph(4)) == 3

    def test_chain(self):
        assert block_graph_vertex_connectivity(block_path(4, 3)) == 1

    def test_path(self):
        assert block_graph_vertex_connectivity(path_graph(5)) == 1

    def test_single_vertex(self):
        assert block_graph_vertex_connectivity(build_graph(1, [])) == 0

    def test_non_block_graph_rejected(self):
        with pytest.raises(ValueError, match="block graph"):
            block_graph_vertex_connectivity(
                build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
            )


class TestInducedSubgraph:
    def test_relabeling_and_weights(self):
        g = build_graph(4, [(1, 2), (2, 4), (3, 4)], {(2, 4): 2.0})
        sub, relabel = induced_subgraph(g, [2, 4])
        assert sub.n == 2
        assert sub.edges == ((1, 2),)
        assert sub.weight(1, 2) == 2.0
        assert relabel == {2: 1, 4: 2}

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="empty"):
            induced_subgraph(path_graph(3), [])
