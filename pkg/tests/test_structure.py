import random
from itertools import permutations

import networkx as nx
import pytest

from conftest import random_graph, random_tree
from signed_inertia.core import SignedGraph, switch
from signed_inertia.families import make_canonical_unicyclic, make_cycle, make_path, make_star, make_theta
from signed_inertia.structure import (
    CycleWitness,
    balance_witness,
    girth,
    internally_disjoint_path_check,
    is_balanced,
    is_connected,
    neighborhood_layers,
    pendant_vertices,
    shortest_cycle,
)


def to_nx(g: SignedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for u, v, _ in g.edges)
    return h


def brute_shortest_cycle(g: SignedGraph):
    """Least vertex sequence among all canonical shortest-cycle writings, by brute force."""
    gr = girth(g)
    sm = g.sign_map()
    best = None
    for vs in permutations(range(g.n), gr):
        if vs[0] != min(vs) or vs[1] > vs[-1]:
            continue
        if all((a, b) in sm for a, b in zip(vs, vs[1:] + vs[:1])):
            best = vs if best is None or vs < best else best
    return best


class TestConnectivity:
    def test_examples(self):
        assert is_connected(SignedGraph(1))
        assert not is_connected(SignedGraph(2))
        assert is_connected(make_cycle(5))

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            is_connected(SignedGraph(0))


class TestGirth:
    def test_examples(self):
        assert girth(make_path(6)) is None
        assert girth(make_cycle(5, False)) == 5
        assert girth(make_theta(5, 3, 5)) == 6

    def test_matches_networkx(self):
        rng = random.Random(11)
        for _ in range(300):
            g = random_graph(rng, rng.randint(1, 11), rng.uniform(0.1, 0.6))
            expected = nx.girth(to_nx(g))
            assert girth(g) == (None if expected == float("inf") else expected)

    @pytest.mark.parametrize("k,l,m", [(2, 3, 4), (4, 4, 4), (3, 6, 5), (6, 2, 6), (5, 3, 5)])
    def test_theta_formula(self, k, l, m):  # noqa: E741
        assert girth(make_theta(k, l, m)) == min(k + l, l + m, k + m) - 2


class TestShortestCycle:
    def test_examples(self):
        c4 = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2), (2, 3), (0, 3)])
        w = shortest_cycle(c4)
        assert w.length == 4 and w.sign == -1
        assert shortest_cycle(make_theta(5, 3, 5)).length == 6
        assert shortest_cycle(make_path(7)) is None

    def test_canonical_choice_matches_brute_force(self):
        rng = random.Random(5)
        for _ in range(150):
            g = random_graph(rng, rng.randint(3, 7), 0.5)
            w = shortest_cycle(g)
            if w is None:
                assert girth(g) is None
                continue
            assert w.vertices == brute_shortest_cycle(g)
            assert w == CycleWitness.from_vertices(g, w.vertices)

    def test_witness_validation(self):
        with pytest.raises(ValueError):
            CycleWitness.from_vertices(make_path(4), [0, 1, 2])
        with pytest.raises(ValueError):
            CycleWitness.from_vertices(make_cycle(4), [0, 1])


class TestBalance:
    def test_examples(self):
        assert is_balanced(make_theta(4, 4, 4))
        tri = SignedGraph.from_edges(3, [(0, 1, -1), (1, 2), (0, 2)])
        w = balance_witness(tri)
        assert not is_balanced(tri) and w.sign == -1
        c4 = SignedGraph.from_edges(4, [(0, 1, -1), (1, 2, -1), (2, 3), (0, 3)])
        assert is_balanced(c4)

    def test_against_switching_search(self):
        # balanced iff some switching makes every edge positive
        rng = random.Random(3)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 7), 0.5)
            expected = any(
                all(s > 0 for _, _, s in switch(g, [v for v in range(g.n) if mask >> v & 1]).edges)
                for mask in range(1 << g.n)
            )
            assert is_balanced(g) == expected
            w = balance_witness(g)
            assert (w is None) == expected
            if w is not None:
                assert w.sign == -1

    def test_switching_preserves_balance(self):
        rng = random.Random(4)
        for _ in range(100):
            g = random_graph(rng, 8, 0.4)
            u = [v for v in range(8) if rng.random() < 0.5]
            assert is_balanced(switch(g, u)) == is_balanced(g)


class TestPendants:
    def test_examples(self):
        assert pendant_vertices(make_star(4)) == {1, 2, 3, 4}
        assert pendant_vertices(make_cycle(6)) == frozenset()
        assert pendant_vertices(make_path(3)) == {0, 2}


class TestLayers:
    def test_whole_vertex_set(self):
        lp = neighborhood_layers(make_cycle(5), range(5))
        assert lp.depth == 0 and lp.layer(1) == frozenset()

    def test_cycle_with_leaf(self):
        g = make_canonical_unicyclic(5, [(0, 1)])
        lp = neighborhood_layers(g, range(5))
        assert lp.layer(1) == {5} and lp.layer(2) == frozenset()

    def test_path_middle(self):
        lp = neighborhood_layers(make_path(5), [2])
        assert lp.layer(1) == {1, 3} and lp.layer(2) == {0, 4}

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            neighborhood_layers(make_path(3), [])
        with pytest.raises(ValueError):
            neighborhood_layers(make_path(3), [1]).layer(0)


class TestDisjointPaths:
    def test_bare_cycle(self):
        c6 = make_cycle(6)
        assert internally_disjoint_path_check(c6, shortest_cycle(c6)) == []

    def test_theta_535(self):
        g = make_theta(5, 3, 5)
        w = shortest_cycle(g)
        found = internally_disjoint_path_check(g, w)
        assert (4, (0, 1)) in found
        assert all(k >= 3 for k, _ in found)

    def test_chord_path(self):
        g = SignedGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (2, 4)])
        w = CycleWitness.from_vertices(g, [0, 1, 2, 3])
        assert internally_disjoint_path_check(g, w) == [(2, (0, 2))]

    def test_trees_have_nothing(self):
        assert shortest_cycle(random_tree(random.Random(1), 9)) is None
