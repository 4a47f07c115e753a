"""Steps 3 to 5: degree classes, good-edge matching and its contraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..graph.graph import Graph
from ..handlers import check


@dataclass(frozen=True)
class DegreePartition:
    """Small (deg <= d^2) and big (deg > d^2) vertices at average degree d."""

    small: frozenset[int]
    big: frozenset[int]
    d: Fraction


@dataclass
class Matching:
    edges: list[tuple[int, int]] = field(default_factory=list)
    matched: set[int] = field(default_factory=set)

    def __len__(self) -> int:
        return len(self.edges)

    def add(self, v: int, w: int) -> None:
        self.edges.append((v, w))
        self.matched.update((v, w))


def is_small(graph: Graph, v: int, d: Fraction) -> bool:
    return graph.degree(v) <= d * d


def classify(graph: Graph) -> DegreePartition:
    d = graph.average_degree()
    small = {v for v in graph.vertices if is_small(graph, v, d)}
    big = set(graph.vertices) - small

    return DegreePartition(frozenset(small), frozenset(big), d)


def is_good_edge(graph: Graph, v: int, w: int, d: Fraction | None = None) -> bool:
    """An edge is good if both ends are small and share <= (d-2)/2 neighbours.

    Args:
        graph (Graph): The working graph
        v (int): One endpoint of a live edge
        w (int): The other endpoint
        d (Fraction | None, optional): The average degree, when the caller
            already has it. Defaults to None.

    Returns:
        bool: Whether vw is good
    """
    if d is None:
        d = graph.average_degree()
    if not (is_small(graph, v, d) and is_small(graph, w, d)):
        return False

    common = len(graph.neighbors(v) & graph.neighbors(w))
    return 2 * common <= d - 2


def maximal_good_matching(graph: Graph, part: DegreePartition) -> Matching:
    """Greedy maximal matching of good edges, scanned by ascending id."""
    matching = Matching()
    for v in sorted(part.small):
        if v in matching.matched:
            continue
        for w in sorted(graph.neighbors(v)):
            if w in matching.matched or w not in part.small:
                continue
            if is_good_edge(graph, v, w, part.d):
                matching.add(v, w)
                break

    return matching


def induced_submatching(graph: Graph, matching: Matching) -> Matching:
    """Greedy maximal induced submatching of matching.

    Taking an edge discards every other matching edge with an endpoint
    adjacent to one of its endpoints.
    """
    edge_of = {}
    for index, (v, w) in enumerate(matching.edges):
        edge_of[v] = edge_of[w] = index
    alive = [True] * len(matching)

    induced = Matching()
    for index, (v, w) in enumerate(matching.edges):
        if not alive[index]:
            continue
        induced.add(v, w)
        for x in (v, w):
            for y in graph.neighbors(x):
                other = edge_of.get(y)
                if other is not None and other != index:
                    alive[other] = False

    return induced


def contract_matching(graph: Graph, matching: Matching) -> None:
    """Contract every edge of an induced matching of good edges into its lower id."""
    if not matching.edges:
        return

    before_d = graph.average_degree()
    before_n = graph.n
    for v, w in matching.edges:
        graph.contract_edge(min(v, w), max(v, w))

    check(
        graph.n == before_n - len(matching),
        "contracting the induced matching removed the wrong number of vertices",
    )
    check(
        graph.average_degree() >= before_d,
        "contracting good edges lowered the average degree",
    )
