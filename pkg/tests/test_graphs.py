import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordlab.diagrams import parse_diagram, random_diagram
from chordlab.graphs import (
    GraphError,
    SimpleGraph,
    count_cycles_naive,
    cycle_sign,
    directed_intersection_graph,
    enumerate_cycles,
    enumerate_graphs,
    format_graph,
    gf2_rank,
    graph_canonical_mask,
    graph_prime,
    graph_tilde,
    intersection_graph,
    is_intersection_graph,
    orient_chords,
    pair_index_table,
    parse_graph,
    prime_mask,
    realize_diagram,
    tilde_mask,
)
from chordlab.invariants import FIVE_WHEEL, THREE_PRISM

K2 = SimpleGraph.from_edges(2, [(0, 1)])
C4 = SimpleGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K4 = SimpleGraph.from_edges(4, list(itertools.combinations(range(4), 2)))

graphs5 = st.integers(0, (1 << 10) - 1).map(lambda m: SimpleGraph.from_edge_mask(5, m))


class TestBasics:
    def test_symmetry_enforced(self):
        with pytest.raises(GraphError):
            SimpleGraph(2, (0b10, 0b00))

    def test_loops_rejected(self):
        with pytest.raises(GraphError):
            SimpleGraph(1, (0b1,))

    def test_parse_edge_list(self):
        assert parse_graph("1-2") == K2
        assert parse_graph("A-B,C-D") == SimpleGraph.from_edges(4, [(0, 1), (2, 3)])

    def test_parse_matrix_roundtrip(self):
        for g in (K2, C4, K4, FIVE_WHEEL):
            assert parse_graph(format_graph(g)) == g

    @pytest.mark.parametrize("bad", ["", "1-1", "1", "x-y!", "3\n01\n10"])
    def test_parse_rejects(self, bad):
        with pytest.raises(GraphError):
            parse_graph(bad)

    def test_edge_mask_roundtrip(self):
        for g in (K2, C4, K4, FIVE_WHEEL, THREE_PRISM):
            assert SimpleGraph.from_edge_mask(g.n, g.edge_mask()) == g


class TestIntersectionGraph:
    def test_crossing_pair(self):
        assert intersection_graph(parse_diagram("ABAB")) == K2

    def test_disjoint_pair(self):
        assert intersection_graph(parse_diagram("AABB")) == SimpleGraph(2, (0, 0))

    def test_alternating_is_complete(self):
        assert intersection_graph(parse_diagram("ABCDABCD")) == K4


class TestDirectedIntersectionGraph:
    def test_canonical_orientation_from_first_endpoint(self):
        d = parse_diagram("ABAB")
        assert orient_chords(d) == [(0, 2), (1, 3)]
        dg = directed_intersection_graph(d)
        assert dg.arrows[0] >> 1 & 1 == 1  # arrow A -> B
        assert dg.arrows[1] >> 0 & 1 == 0

    def test_exactly_one_arrow_per_edge(self, diagram_classes):
        for n in range(2, 7):
            for d in diagram_classes(n):
                directed_intersection_graph(d)  # constructor validates

    def test_flipping_one_chord_preserves_cycle_signs(self):
        rng = random.Random(3)
        for _ in range(100):
            d = random_diagram(5, rng)
            base = directed_intersection_graph(d)
            cycles = enumerate_cycles(base.graph, 4)
            flip = 1 << rng.randrange(5)
            flipped = directed_intersection_graph(d, flip)
            for cyc in cycles:
                assert cycle_sign(base, cyc) == cycle_sign(flipped, cyc)

    def test_published_signed_four_gons(self):
        # the worked 4-chord example: labeled chords C, D, A, B reading
        # counterclockwise, with the three 4-gons signed -, +, +
        d = parse_diagram("CDABCDAB")
        dg = directed_intersection_graph(d)
        # letters C,D,A,B normalize to ids 0,1,2,3 in first-appearance order
        signs = {cyc: cycle_sign(dg, cyc) for cyc in enumerate_cycles(dg.graph, 4)}
        assert signs == {(0, 1, 2, 3): -1, (0, 1, 3, 2): 1, (0, 2, 1, 3): 1}


class TestCycles:
    def test_k4_has_three_four_gons(self):
        assert len(enumerate_cycles(K4, 4)) == 3
        assert count_cycles_naive(K4, 4) == 3

    def test_c4_has_one(self):
        assert len(enumerate_cycles(C4, 4)) == 1

    def test_trees_have_none(self):
        tree = SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 3), (1, 4)])
        for l in (3, 4, 5):
            assert enumerate_cycles(tree, l) == []

    def test_rejects_short_lengths(self):
        with pytest.raises(ValueError):
            enumerate_cycles(K4, 2)

    def test_canonical_form_unique_and_sorted(self):
        cycles = enumerate_cycles(K4, 4)
        assert cycles == sorted(set(cycles))
        for cyc in cycles:
            assert cyc[0] == min(cyc)
            assert cyc[1] < cyc[-1]

    def test_matches_naive_oracle_exhaustive_n5(self):
        for g in enumerate_graphs(5, "labeled"):
            for l in (3, 4, 5):
                assert len(enumerate_cycles(g, l)) == count_cycles_naive(g, l)

    def test_matches_naive_oracle_n6_classes(self):
        for g in enumerate_graphs(6, "up-to-iso"):
            for l in (3, 4, 5, 6):
                assert len(enumerate_cycles(g, l)) == count_cycles_naive(g, l)


class TestCycleSign:
    def test_consistent_cycle_is_positive(self):
        g = C4
        arrows = [0] * 4
        for u, v in ((0, 1), (1, 2), (2, 3), (3, 0)):
            arrows[u] |= 1 << v
        from chordlab.graphs import DirectedIntersectionGraph

        dg = DirectedIntersectionGraph(graph=g, arrows=tuple(arrows))
        assert cycle_sign(dg, (0, 1, 2, 3)) == 1
        # traversal direction does not matter
        assert cycle_sign(dg, (0, 3, 2, 1)) == 1

    def test_odd_length_rejected(self):
        d = parse_diagram("ABCABC")
        dg = directed_intersection_graph(d)
        with pytest.raises(ValueError):
            cycle_sign(dg, (0, 1, 2))


class TestGF2:
    def test_examples(self):
        assert gf2_rank(K2.rows, 2) == 2
        assert gf2_rank((0,), 1) == 0
        assert gf2_rank(C4.rows, 4) == 2

    @given(graphs5, st.randoms(use_true_random=False))
    def test_rank_is_relabeling_invariant(self, g, rnd):
        perm = list(range(5))
        rnd.shuffle(perm)
        assert gf2_rank(g.rows, 5) == gf2_rank(g.relabeled(perm).rows, 5)


class TestPrimeAndTilde:
    def test_prime_examples(self):
        assert graph_prime(K2, 0, 1) == SimpleGraph(2, (0, 0))
        assert graph_prime(SimpleGraph(2, (0, 0)), 0, 1) == K2
        assert graph_prime(graph_prime(K4, 1, 3), 1, 3) == K4

    def test_prime_rejects_equal_vertices(self):
        with pytest.raises(GraphError):
            graph_prime(K2, 1, 1)

    def test_tilde_path_becomes_triangle(self):
        path = SimpleGraph.from_edges(3, [(0, 1), (1, 2)])
        expected = SimpleGraph.from_edges(3, [(0, 1), (1, 2), (0, 2)])
        assert graph_tilde(path, 0, 1) == expected

    def test_tilde_with_isolated_partner_is_identity(self):
        g = SimpleGraph.from_edges(3, [(0, 2)])
        assert graph_tilde(g, 0, 1) == g

    def test_tilde_involution_exhaustive_n5(self):
        for g in enumerate_graphs(5, "labeled"):
            for a in range(5):
                for b in range(5):
                    if a != b:
                        assert graph_tilde(graph_tilde(g, a, b), a, b) == g

    @given(graphs5)
    def test_tilde_preserves_partner_adjacency_and_far_edges(self, g):
        for a in range(5):
            for b in range(5):
                if a == b:
                    continue
                t = graph_tilde(g, a, b)
                # b's adjacencies are untouched, as are all edges not at a
                assert t.rows[b] == g.rows[b]
                for u in range(5):
                    if u != a:
                        assert t.rows[u] & ~(1 << a) == g.rows[u] & ~(1 << a)

    def test_mask_transforms_match_object_transforms(self):
        rng = random.Random(9)
        for _ in range(300):
            n = rng.randrange(2, 7)
            mask = rng.randrange(1 << (n * (n - 1) // 2))
            g = SimpleGraph.from_edge_mask(n, mask)
            a, b = rng.sample(range(n), 2)
            assert prime_mask(n, mask, a, b) == graph_prime(g, a, b).edge_mask()
            assert tilde_mask(n, mask, a, b) == graph_tilde(g, a, b).edge_mask()

    def test_pair_index_matches_edge_mask(self):
        tab = pair_index_table(4)
        g = SimpleGraph.from_edges(4, [(1, 3)])
        assert g.edge_mask() == 1 << tab[1][3]


class TestEnumerationAndIsomorphism:
    def test_labeled_count_n3(self):
        assert sum(1 for _ in enumerate_graphs(3, "labeled")) == 8

    def test_iso_count_n4(self):
        assert sum(1 for _ in enumerate_graphs(4, "up-to-iso")) == 11

    def test_iso_count_n6(self):
        assert sum(1 for _ in enumerate_graphs(6, "up-to-iso")) == 156

    @given(graphs5, st.randoms(use_true_random=False))
    def test_canonical_mask_invariant(self, g, rnd):
        perm = list(range(5))
        rnd.shuffle(perm)
        assert graph_canonical_mask(g) == graph_canonical_mask(g.relabeled(perm))


class TestRealizability:
    def test_every_four_vertex_graph_realizable(self):
        for g in enumerate_graphs(4, "labeled"):
            assert is_intersection_graph(g)
            d = realize_diagram(g)
            assert graph_canonical_mask(intersection_graph(d)) == graph_canonical_mask(g)

    def test_wheel_and_prism_are_not(self):
        assert not is_intersection_graph(FIVE_WHEEL)
        assert not is_intersection_graph(THREE_PRISM)
        assert realize_diagram(FIVE_WHEEL) is None

    def test_exactly_two_six_vertex_obstructions(self):
        bad = [
            g for g in enumerate_graphs(6, "up-to-iso") if not is_intersection_graph(g)
        ]
        expected = {graph_canonical_mask(FIVE_WHEEL), graph_canonical_mask(THREE_PRISM)}
        assert {graph_canonical_mask(g) for g in bad} == expected

    def test_all_five_vertex_graphs_realizable(self):
        assert all(is_intersection_graph(g) for g in enumerate_graphs(5, "up-to-iso"))
