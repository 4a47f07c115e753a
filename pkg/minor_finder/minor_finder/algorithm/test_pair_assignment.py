from fractions import Fraction
from itertools import combinations
from unittest import TestCase

from hypothesis import given, settings
from hypothesis import strategies as st

from ..certificate.certificate import verify_model
from ..exceptions import GuardViolation, InternalInvariantViolation
from ..graph.graph import build_graph
from .dense_matching import DegreePartition, Matching, classify, maximal_good_matching
from .pair_assignment import (
    PairRegistry,
    PrimePartition,
    assign_pairs,
    build_prime_sets,
    dense_core,
    neighborhood_clique,
)
from .test_dense_matching import normalized


def prime(big: set[int], small: set[int]) -> PrimePartition:
    return PrimePartition(frozenset(big), frozenset(small))


class TestBuildPrimeSets(TestCase):
    """Test Cases"""

    def test_nothing_big_or_matched(self) -> None:
        part = DegreePartition(frozenset({0, 1, 2}), frozenset(), Fraction(2))
        pp = build_prime_sets(part, Matching())
        self.assertEqual(pp.big, frozenset())
        self.assertEqual(pp.small, frozenset({0, 1, 2}))

    def test_matched_vertices_join_big(self) -> None:
        part = DegreePartition(frozenset({1, 2, 3}), frozenset({0}), Fraction(2))
        matching = Matching()
        matching.add(1, 2)
        pp = build_prime_sets(part, matching)
        self.assertEqual(pp.big, frozenset({0, 1, 2}))
        self.assertEqual(pp.small, frozenset({3}))

    def test_matched_big_vertex_rejected(self) -> None:
        part = DegreePartition(frozenset({1}), frozenset({0, 2}), Fraction(2))
        matching = Matching()
        matching.add(0, 1)
        with self.assertRaises(InternalInvariantViolation):
            build_prime_sets(part, matching)


class TestAssignPairs(TestCase):
    def test_one_pair_two_candidates(self) -> None:
        g = build_graph([(0, 2), (1, 2), (0, 3), (1, 3)])
        registry = assign_pairs(g, prime({0, 1}, {2, 3}))
        self.assertEqual(registry.assigned, {(0, 1): 2})
        self.assertEqual(registry.assignees, {2})

    def test_empty_big_side(self) -> None:
        g = build_graph([(0, 1), (1, 2)])
        self.assertEqual(len(assign_pairs(g, prime(set(), {0, 1, 2}))), 0)

    def test_single_big_neighbour_never_assigned(self) -> None:
        g = build_graph([(0, 2), (1, 3)])
        self.assertEqual(len(assign_pairs(g, prime({0, 1}, {2, 3}))), 0)


class TestDenseCore(TestCase):
    def test_single_entry(self) -> None:
        # isolated 3..5 bring d down to 2/3 so the guard holds
        g = build_graph([(0, 2), (1, 2)], n=6)
        pp = prime({0, 1}, {2, 3, 4, 5})
        core = dense_core(g, pp, assign_pairs(g, pp))
        self.assertEqual(sorted(core.edges()), [(0, 1)])
        self.assertEqual(core.branch[0], {0, 2})

    def test_two_entries(self) -> None:
        g = build_graph([(0, 3), (1, 3), (0, 4), (2, 4)], n=6)
        pp = prime({0, 1, 2}, {3, 4, 5})
        registry = assign_pairs(g, pp)
        self.assertEqual(registry.assigned, {(0, 1): 3, (0, 2): 4})
        core = dense_core(g, pp, registry)
        self.assertEqual(sorted(core.vertices), [0, 1, 2])
        self.assertEqual(sorted(core.edges()), [(0, 1), (0, 2)])

    def test_existing_big_edges_survive(self) -> None:
        g = build_graph([(0, 3), (1, 3), (0, 4), (2, 4), (1, 2)], n=8)
        pp = prime({0, 1, 2}, {3, 4, 5, 6, 7})
        core = dense_core(g, pp, assign_pairs(g, pp))
        self.assertEqual(sorted(core.edges()), [(0, 1), (0, 2), (1, 2)])

    def test_guard(self) -> None:
        g = build_graph([(0, 2), (1, 2)])
        pp = prime({0, 1}, {2})
        with self.assertRaises(GuardViolation):
            dense_core(g, pp, assign_pairs(g, pp))

    def test_empty_big_side_is_a_guard_violation(self) -> None:
        g = build_graph([(0, 1)])
        with self.assertRaises(GuardViolation):
            dense_core(g, prime(set(), {0, 1}), PairRegistry())


class TestNeighborhoodClique(TestCase):
    EDGES = [(6, 0), (6, 1), (6, 2), (3, 0), (3, 1), (4, 0), (4, 2), (5, 1), (5, 2)]

    def test_triangle_from_assignees(self) -> None:
        g = build_graph(self.EDGES)
        original = g.copy()
        pp = prime({0, 1, 2}, {3, 4, 5, 6})
        registry = assign_pairs(g, pp)
        self.assertNotIn(6, registry.assignees)

        model = neighborhood_clique(g, 6, pp, registry, 3)
        self.assertEqual(model.sorted_sets(), [[0, 3, 4], [1, 5], [2]])
        self.assertTrue(verify_model(original, model, 3).valid)

    def test_already_adjacent_pairs(self) -> None:
        g = build_graph(self.EDGES + [(0, 1), (1, 2)])
        original = g.copy()
        pp = prime({0, 1, 2}, {3, 4, 5, 6})
        model = neighborhood_clique(g, 6, pp, assign_pairs(g, pp), 3)
        self.assertTrue(verify_model(original, model, 3).valid)

    def test_missing_entry(self) -> None:
        g = build_graph(self.EDGES)
        with self.assertRaises(InternalInvariantViolation):
            neighborhood_clique(g, 6, prime({0, 1, 2}, {3, 4, 5, 6}), PairRegistry(), 3)


class TestRegistryInvariants(TestCase):
    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(min_value=40, max_value=150), seed=st.integers(0, 10**6))
    def test_assignment_is_unique_and_maximal(self, n: int, seed: int) -> None:
        g = normalized(n, seed)
        part = classify(g)
        pp = build_prime_sets(part, maximal_good_matching(g, part))
        registry = assign_pairs(g, pp)

        self.assertEqual(len(registry.assigned), len(registry.pair_of))
        for (x, y), z in registry.assigned.items():
            self.assertIn(z, pp.small)
            self.assertTrue(g.has_edge(x, z) and g.has_edge(y, z))
        for u in pp.small - registry.assignees:
            for pair in combinations(sorted(g.neighbors(u) & pp.big), 2):
                self.assertIn(pair, registry.assigned)
