"""Density normalisation (Steps 1 and 2).

Trims the edge list so the average degree lands in [D, D+1], where
D = (2 + epsilon) * g(t), then interleaves low-degree peeling with edge
deletion until both the window and the minimum-degree bound hold.
"""

from __future__ import annotations

from fractions import Fraction

from ..exceptions import InsufficientDensity
from ..graph.graph import Graph
from ..handlers import check
from ..logger import minor_logger
from ..utils import ceil_fraction, format_fraction
from .config import Config


class DegreeBuckets:
    """Bucket queue over vertex degrees with lazy min/max pointers.

    Degrees only ever decrease, so the max pointer moves down monotonically
    and the min pointer moves up at most once per bucket between decrements.
    """

    def __init__(self, graph: Graph) -> None:
        self._degree = {v: graph.degree(v) for v in graph.vertices}
        top = max(self._degree.values(), default=0)
        self._buckets: list[set[int]] = [set() for _ in range(top + 1)]
        for v, k in self._degree.items():
            self._buckets[k].add(v)
        self._low = 0
        self._high = top

    def __len__(self) -> int:
        return len(self._degree)

    def min_vertex(self) -> int | None:
        while self._low <= self._high and not self._buckets[self._low]:
            self._low += 1
        if self._low > self._high:
            return None

        return next(iter(self._buckets[self._low]))

    def max_vertex(self) -> int | None:
        while self._high >= 0 and not self._buckets[self._high]:
            self._high -= 1
        if self._high < 0:
            return None

        return next(iter(self._buckets[self._high]))

    def decrement(self, v: int) -> None:
        k = self._degree[v]
        self._buckets[k].discard(v)
        self._buckets[k - 1].add(v)
        self._degree[v] = k - 1
        self._low = min(self._low, k - 1)

    def remove(self, v: int) -> None:
        self._buckets[self._degree.pop(v)].discard(v)


def trim_edges(graph: Graph, threshold: Fraction) -> int:
    """Keep only the first ceil(D*n/2) edges in input order.

    Returns:
        int: The number of edges deleted
    """
    budget = ceil_fraction(threshold * graph.n / 2)
    surplus = list(graph.edges())[budget:]
    for v, w in surplus:
        graph.delete_edge(v, w)

    return len(surplus)


def normalize_density(graph: Graph, cfg: Config) -> None:
    """Normalise graph in place so D <= d(G) <= D+1 and delta(G) > d(G)/2.

    Args:
        graph (Graph): The working graph, mutated in place
        cfg (Config): The run configuration

    Raises:
        InsufficientDensity: If d(G) < D on entry
    """
    threshold = cfg.threshold
    upper = threshold + 1
    actual = graph.average_degree()
    if actual < threshold:
        raise InsufficientDensity(threshold, actual)

    trimmed = trim_edges(graph, threshold)
    buckets = DegreeBuckets(graph)
    peeled_vertices = peeled_edges = 0

    while True:
        # A vertex of degree <= m/n = d/2 can go without lowering d.
        v = buckets.min_vertex()
        if v is not None and graph.degree(v) * graph.n <= graph.m:
            for u in list(graph.neighbors(v)):
                buckets.decrement(u)
            buckets.remove(v)
            graph.delete_vertex(v)
            peeled_vertices += 1
        elif Fraction(2 * graph.m, graph.n) > upper:
            v = buckets.max_vertex()
            w = next(iter(graph.neighbors(v)))
            graph.delete_edge(v, w)
            buckets.decrement(v)
            buckets.decrement(w)
            peeled_edges += 1
        else:
            break

        check(
            graph.n > 0 and graph.average_degree() >= threshold,
            "average degree fell below the density threshold while peeling",
        )

    minor_logger.info(
        f"normalized to n={graph.n} m={graph.m}: trimmed {trimmed} edges, "
        f"peeled {peeled_vertices} vertices and {peeled_edges} edges, "
        f"window [{format_fraction(threshold)}, {format_fraction(upper)}]"
    )


def satisfies_window(graph: Graph, cfg: Config) -> bool:
    """Return True iff D <= d(G) <= D+1 and every degree exceeds d(G)/2."""
    d = graph.average_degree()
    if not cfg.threshold <= d <= cfg.threshold + 1:
        return False

    return all(graph.degree(v) * graph.n > graph.m for v in graph.vertices)
