"""Hypothesis strategies shared by the test suites."""

from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from .graph.graph import Graph, build_graph

PROPERTY_SETTINGS = settings(
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def edge_lists(
    draw: st.DrawFn, min_vertices: int = 1, max_vertices: int = 8
) -> tuple[int, list[tuple[int, int]]]:
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    if not pairs:
        return n, []

    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs)))
    return n, edges


@st.composite
def graphs(draw: st.DrawFn, min_vertices: int = 1, max_vertices: int = 8) -> Graph:
    n, edges = draw(edge_lists(min_vertices=min_vertices, max_vertices=max_vertices))
    return build_graph(edges, n=n)
