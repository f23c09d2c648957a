import random
from itertools import combinations, product

import pytest

from signed_inertia.core import SignedGraph, switch
from signed_inertia.enumeration import enumerate_connected_graphs, enumerate_switching_classes
from signed_inertia.families import (
    BalancedCompleteMultipartite,
    CanonicalUnicyclic,
    Cycle,
    CycleWithPendantStar,
    Other,
    Path,
    StarDecomposition,
    Star,
    Theta,
    cycle_core,
    is_balanced_complete_multipartite,
    make_canonical_unicyclic,
    make_complete_multipartite,
    make_cycle,
    make_cycle_with_pendant_star,
    make_path,
    make_star,
    make_theta,
    parity_condition,
    recognize,
    recognize_all,
    star_decomposition,
    theta_label,
)
from signed_inertia.inertia import exact_inertia
from signed_inertia.structure import girth, is_balanced


def shuffled(g: SignedGraph, seed: int) -> SignedGraph:
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return g.relabel(perm)


def theta_params(limit=6):
    for k, l, m in product(range(2, limit + 1), repeat=3):  # noqa: E741
        if sorted((k, l, m))[1] > 2:
            yield k, l, m


class TestConstructors:
    def test_cycles(self):
        assert girth(make_cycle(4)) == 4 and is_balanced(make_cycle(4))
        assert not is_balanced(make_cycle(4, False))
        with pytest.raises(ValueError):
            make_cycle(2)

    def test_path_and_star(self):
        assert make_path(1) == SignedGraph(1)
        assert make_star(3).degrees()[0] == 3
        with pytest.raises(ValueError):
            make_star(0)

    def test_multipartite(self):
        k23 = make_complete_multipartite([2, 3])
        assert (k23.n, k23.m, girth(k23), exact_inertia(k23).p_plus) == (5, 6, 4, 1)
        assert make_complete_multipartite([1, 1, 1]) == make_cycle(3)
        k222 = make_complete_multipartite([2, 2, 2])
        assert girth(k222) == 3 and exact_inertia(k222).p_plus == 1

    def test_canonical_unicyclic(self):
        g = make_canonical_unicyclic(6, [(0, 1), (2, 1), (4, 1)])
        assert g.n == 9
        assert star_decomposition(g) == StarDecomposition(3, (1, 1, 1), (1, 1, 1))
        assert star_decomposition(make_canonical_unicyclic(5, [(0, 2)])).gaps == (4,)
        assert exact_inertia(make_canonical_unicyclic(6, [(0, 5)])).p_plus == 3
        with pytest.raises(ValueError):
            make_canonical_unicyclic(5, [(0, 1), (0, 2)])
        with pytest.raises(ValueError):
            make_canonical_unicyclic(5, [(5, 1)])

    def test_cycle_with_pendant_star(self):
        assert exact_inertia(make_cycle_with_pendant_star(8, True, 1)).p_plus == 4
        assert exact_inertia(make_cycle_with_pendant_star(4, False, 2)).p_plus == 3
        g = make_cycle_with_pendant_star(3, True, 1)
        assert g.n == 5 and girth(g) == 3

    def test_theta_fixtures(self):
        assert (girth(make_theta(5, 3, 5, (-1, -1))), exact_inertia(make_theta(5, 3, 5, (-1, -1))).p_plus) == (6, 3)
        assert (girth(make_theta(5, 5, 5)), exact_inertia(make_theta(5, 5, 5)).p_plus) == (8, 4)
        assert (girth(make_theta(5, 4, 5)), exact_inertia(make_theta(5, 4, 5)).p_plus) == (7, 4)

    def test_theta_signs_are_cycle_signs(self):
        for s in product((1, -1), repeat=2):
            g = make_theta(4, 5, 6, s)
            assert is_balanced(g) == (s == (1, 1))

    def test_theta_rejects_two_short_paths(self):
        with pytest.raises(ValueError):
            make_theta(2, 2, 5)


class TestRecognition:
    def test_examples(self):
        assert recognize(make_complete_multipartite([2, 3])) == BalancedCompleteMultipartite((2, 3))
        assert recognize(make_cycle(7, False)) == Cycle(7, False)
        label = recognize(make_canonical_unicyclic(6, [(0, 1), (3, 2)]))
        assert isinstance(label, CanonicalUnicyclic)
        assert (label.girth, label.t, label.gaps) == (6, 2, (2, 2))

    def test_labels_print(self):
        assert str(recognize(make_complete_multipartite([3, 2]))) == "BalancedCompleteMultipartite[2,3]"
        assert str(recognize(make_theta(5, 4, 5))) == "Theta(5,4,5)"
        assert str(recognize(make_theta(5, 3, 5, (-1, -1)))) == "Theta(5,3,5)[--]"
        assert str(Cycle(7, False)) == "Cycle(7,unbalanced)"

    def test_priority_and_overlaps(self):
        assert [str(x) for x in recognize_all(make_cycle(3))] == ["Cycle(3,balanced)", "BalancedCompleteMultipartite[1,1,1]"]
        assert recognize_all(make_complete_multipartite([2, 3]))[1] == theta_label(3, 3, 3)
        assert recognize(make_path(2)) == Path(2) and Star(1) in recognize_all(make_path(2))

    def test_unbalanced_multipartite_is_not_labelled(self):
        g = make_complete_multipartite([2, 2])
        bad = g.with_signs({(0, 2): -1})
        assert is_balanced_complete_multipartite(g) == (2, 2)
        assert not any(isinstance(x, BalancedCompleteMultipartite) for x in recognize_all(bad))

    def test_other(self):
        k4 = make_complete_multipartite([1, 1, 1, 1]).with_signs({(0, 1): -1})
        assert recognize(k4) == Other()

    def test_json(self):
        assert Theta(5, 3, 5, (-1, -1)).to_json() == {"kind": "theta", "k": 5, "l": 3, "m": 5, "signs": [-1, -1]}

    def test_star_decomposition_absent(self):
        g = SignedGraph.from_edges(8, [*make_cycle(6).edges, (0, 6, 1), (6, 7, 1)])
        assert star_decomposition(g) is None
        assert star_decomposition(make_cycle(5)) is None

    def test_star_decomposition_single_star(self):
        assert star_decomposition(make_canonical_unicyclic(7, [(0, 3)])) == StarDecomposition(1, (6,), (3,))

    @pytest.mark.parametrize(
        "sd, g, cond",
        [
            (StarDecomposition(3, (1, 1, 1), (1, 1, 1)), 6, "all-gaps-odd"),
            (StarDecomposition(2, (1, 2), (1, 1)), 5, "exactly-one-even-gap"),
            (StarDecomposition(1, (4,), (2,)), 5, "t=1"),
            (StarDecomposition(2, (0, 2), (1, 1)), 4, "neither"),
        ],
    )
    def test_parity_condition(self, sd, g, cond):
        assert parity_condition(sd, g).condition == cond
        assert parity_condition(sd, g).girth_mod4 == g % 4

    def test_parity_condition_rejects_inconsistent(self):
        with pytest.raises(ValueError):
            parity_condition(StarDecomposition(2, (1, 1), (1, 1)), 5)


class TestRoundTrip:
    def test_cycles(self):
        for n in range(3, 21):
            for b in (True, False):
                g = make_cycle(n, b)
                assert recognize(g) == Cycle(n, b)
                assert recognize(shuffled(switch(g, range(0, n, 3)), n)) == Cycle(n, b)

    def test_multipartite(self):
        for parts in product((1, 2, 3), repeat=3):
            g = make_complete_multipartite(parts)
            label = BalancedCompleteMultipartite(tuple(sorted(parts)))
            assert label in recognize_all(shuffled(g, sum(parts)))
            assert exact_inertia(g).p_plus == 1

    def test_canonical_unicyclic_grid(self):
        for gr in range(3, 11):
            for t in range(1, 4):
                for pos in combinations(range(gr), t):
                    counts = [1 + (i + gr) % 3 for i in range(t)]
                    for b in (True, False):
                        g = make_canonical_unicyclic(gr, list(zip(pos, counts)), b)
                        label = recognize(shuffled(g, gr * 31 + t))
                        assert isinstance(label, CanonicalUnicyclic)
                        sd = star_decomposition(g)
                        assert (label.girth, label.gaps, label.leaves, label.balanced) == (gr, sd.gaps, sd.leaf_counts, b)
                        assert sum(sd.gaps) + sd.t == gr
                        assert sorted(sd.leaf_counts) == sorted(counts)

    def test_gap_normalisation_is_rotation_reflection_invariant(self):
        base = make_canonical_unicyclic(9, [(0, 1), (2, 2), (5, 3)])
        expected = star_decomposition(base)
        for shift in range(9):
            for flip in (False, True):
                stars = [(((-p if flip else p) + shift) % 9, c) for p, c in [(0, 1), (2, 2), (5, 3)]]
                assert star_decomposition(make_canonical_unicyclic(9, stars)) == expected

    def test_pendant_star(self):
        for gr in range(3, 13):
            for b in (True, False):
                for t in (1, 2, 3):
                    g = make_cycle_with_pendant_star(gr, b, t)
                    assert recognize(shuffled(g, gr + t)) == CycleWithPendantStar(gr, b, t)

    def test_theta_grid(self):
        for k, l, m in theta_params():  # noqa: E741
            for s in product((1, -1), repeat=2):
                g = make_theta(k, l, m, s)
                labels = recognize_all(shuffled(switch(g, [0, 2]), k * l * m))
                # K_{1,1,2} and K_{2,3} are thetas too, and multipartite wins priority
                thetas = [x for x in labels if isinstance(x, Theta)]
                assert thetas == [theta_label(k, l, m, s)]
                assert thetas[0].girth == girth(g)

    def test_theta_label_is_independent_of_parametrisation(self):
        # permuting the paths and carrying the cycle signs along describes the same signed graph
        for k, l, m in theta_params(5):  # noqa: E741
            for s1, s2 in product((1, -1), repeat=2):
                expected = theta_label(k, l, m, (s1, s2))
                assert theta_label(m, l, k, (s2, s1)) == expected
                assert theta_label(l, k, m, (s1, s1 * s2)) == expected
                assert theta_label(k, m, l, (s1 * s2, s2)) == expected

    def test_canonical_unicyclic_sign_independence(self):
        for gr in range(3, 11):
            for pos in combinations(range(gr), 2):
                stars = [(p, 1) for p in pos]
                assert (
                    exact_inertia(make_canonical_unicyclic(gr, stars, True)).p_plus
                    == exact_inertia(make_canonical_unicyclic(gr, stars, False)).p_plus
                )


class TestAgainstEnumeration:
    def test_p_plus_one_iff_balanced_multipartite(self):
        for n in range(2, 7):
            for g in enumerate_connected_graphs(n):
                for h in enumerate_switching_classes(g):
                    is_bcm = any(isinstance(x, BalancedCompleteMultipartite) for x in recognize_all(h))
                    assert (exact_inertia(h).p_plus == 1) == is_bcm

    def test_cycle_core_only_for_unicyclic(self):
        for g in enumerate_connected_graphs(5):
            core = cycle_core(g)
            assert (core is not None) == (g.m == g.n)
