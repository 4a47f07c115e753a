from fractions import Fraction
from unittest import TestCase

import networkx as nx
from hypothesis import given
from hypothesis import strategies as st

from ..exceptions import EmptyGraph, InputError, NotAnEdge, StaleReference
from ..strategies import PROPERTY_SETTINGS, graphs
from .graph import Graph, build_graph, is_connected_set
from .trace import TraceKind, TraceRecorder, Tracer

TRIANGLE = [(0, 1), (1, 2), (2, 0)]


def petersen() -> Graph:
    return build_graph(nx.petersen_graph().edges())


class TestBuildGraph(TestCase):
    """Test Cases"""

    def test_triangle(self) -> None:
        g = build_graph(TRIANGLE)
        self.assertEqual((g.n, g.m), (3, 3))
        self.assertEqual(g.ops, 0)
        self.assertEqual(g.branch, {0: {0}, 1: {1}, 2: {2}})

    def test_duplicates_and_loops_dropped(self) -> None:
        g = build_graph([(0, 1), (1, 0), (0, 0)])
        self.assertEqual((g.n, g.m), (2, 1))
        self.assertEqual(g.dropped_duplicates, 1)
        self.assertEqual(g.dropped_loops, 1)

    def test_petersen_is_cubic(self) -> None:
        g = petersen()
        self.assertEqual((g.n, g.m), (10, 15))
        self.assertTrue(all(g.degree(v) == 3 for v in g.vertices))

    def test_negative_id_rejected(self) -> None:
        with self.assertRaises(InputError):
            build_graph([(0, -1)])

    def test_isolated_vertices_with_n(self) -> None:
        g = build_graph([(0, 1)], n=4)
        self.assertEqual((g.n, g.m), (4, 1))


class TestAverageDegree(TestCase):
    def test_values(self) -> None:
        self.assertEqual(build_graph(TRIANGLE).average_degree(), 2)
        self.assertEqual(
            build_graph([(0, 1), (1, 2), (2, 3)]).average_degree(), Fraction(3, 2)
        )
        self.assertEqual(petersen().average_degree(), 3)

    def test_empty_graph(self) -> None:
        with self.assertRaises(EmptyGraph):
            Graph().average_degree()


class TestMutations(TestCase):
    def test_delete_edge(self) -> None:
        g = build_graph(TRIANGLE)
        g.delete_edge(0, 1)
        self.assertEqual(g.m, 2)
        self.assertEqual(g.average_degree(), Fraction(4, 3))
        with self.assertRaises(StaleReference):
            g.delete_edge(0, 1)

    def test_delete_vertex(self) -> None:
        g = build_graph(TRIANGLE)
        g.delete_vertex(0)
        self.assertEqual((g.n, g.m), (2, 1))
        self.assertNotIn(0, g.branch)
        with self.assertRaises(StaleReference):
            g.delete_vertex(0)

    def test_delete_star_center(self) -> None:
        g = build_graph([(0, 1), (0, 2), (0, 3), (0, 4)])
        g.delete_vertex(0)
        self.assertEqual((g.n, g.m), (4, 0))

    def test_contract_triangle(self) -> None:
        g = build_graph(TRIANGLE)
        g.contract_edge(0, 1)
        self.assertEqual(list(g.edges()), [(0, 2)])
        self.assertEqual(g.branch[0], {0, 1})

    def test_contract_path(self) -> None:
        g = build_graph([(0, 1), (1, 2), (2, 3)])
        g.contract_edge(1, 2)
        self.assertEqual((g.n, g.m), (3, 2))
        self.assertEqual(sorted(g.edges()), [(0, 1), (1, 3)])

    def test_contract_cycle_dedups(self) -> None:
        g = build_graph([(0, 1), (1, 2), (2, 3), (3, 0)])
        g.contract_edge(0, 1)
        self.assertEqual(sorted(g.edges()), [(0, 2), (0, 3), (2, 3)])
        g.audit()

    def test_contract_non_edge(self) -> None:
        g = build_graph([(0, 1), (1, 2)])
        with self.assertRaises(NotAnEdge):
            g.contract_edge(0, 2)

    def test_ops_counter_grows(self) -> None:
        g = petersen()
        before = g.ops
        g.contract_edge(0, 1)
        self.assertGreater(g.ops, before)
        self.assertLessEqual(g.ops - before, 3 + 1)


class TestInducedSubgraph(TestCase):
    def test_k4_to_triangle(self) -> None:
        g = build_graph(nx.complete_graph(4).edges())
        sub = g.induced_subgraph({0, 1, 3})
        self.assertEqual((sub.n, sub.m), (3, 3))

    def test_petersen_outer_cycle(self) -> None:
        sub = petersen().induced_subgraph(range(5))
        self.assertEqual((sub.n, sub.m), (5, 5))
        self.assertTrue(all(sub.degree(v) == 2 for v in sub.vertices))

    def test_empty_keep(self) -> None:
        sub = petersen().induced_subgraph(set())
        self.assertEqual((sub.n, sub.m), (0, 0))

    def test_dead_vertex(self) -> None:
        g = build_graph(TRIANGLE)
        g.delete_vertex(2)
        with self.assertRaises(StaleReference):
            g.induced_subgraph({1, 2})

    def test_branches_restricted(self) -> None:
        g = build_graph(TRIANGLE + [(2, 3)])
        g.contract_edge(2, 3)
        sub = g.induced_subgraph({1, 2})
        self.assertEqual(sub.branch, {1: {1}, 2: {2, 3}})

    def test_traced_restriction(self) -> None:
        g = build_graph(TRIANGLE)
        recorder = TraceRecorder()
        g.tracer = Tracer()
        g.tracer.attach(recorder)
        g.induced_subgraph({0, 1})
        self.assertEqual(
            [(e.kind, e.payload) for e in recorder.events],
            [(TraceKind.VERTEX_DELETED, (2,))],
        )


class TestMutationProperties(TestCase):
    @PROPERTY_SETTINGS
    @given(graph=graphs(min_vertices=2), data=st.data())
    def test_invariants_survive_random_mutations(self, graph: Graph, data) -> None:
        original = graph.copy()
        for _ in range(data.draw(st.integers(min_value=0, max_value=8))):
            live_edges = list(graph.edges())
            action = data.draw(st.sampled_from(["contract", "edge", "vertex"]))
            before = graph.ops
            if action == "vertex" and graph.n:
                graph.delete_vertex(data.draw(st.sampled_from(sorted(graph.vertices))))
            elif live_edges:
                v, w = data.draw(st.sampled_from(live_edges))
                if action == "contract":
                    graph.contract_edge(v, w)
                else:
                    graph.delete_edge(v, w)
            self.assertGreaterEqual(graph.ops, before)

            graph.audit()
            graph.audit_branches(original)
            self.assertEqual(2 * graph.m, sum(graph.degree(v) for v in graph.vertices))

    def test_is_connected_set(self) -> None:
        g = build_graph([(0, 1), (1, 2), (2, 3)])
        self.assertTrue(is_connected_set(g, {1, 2, 3}))
        self.assertFalse(is_connected_set(g, {0, 2}))
        self.assertFalse(is_connected_set(g, set()))
