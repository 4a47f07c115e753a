"""Mutable simple graph with branch-set tracking and an operation counter.

Vertex ids are stable for the lifetime of a Graph. Contraction keeps the
surviving endpoint's id, so every live vertex of a working graph is also a
vertex of the input graph, and ``branch[v]`` records the input vertices that
were merged into it.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator
from fractions import Fraction

from ..exceptions import (
    EmptyGraph,
    InputError,
    InternalInvariantViolation,
    NotAnEdge,
    StaleReference,
)
from ..handlers import throw
from ..utils import canonical_pair
from .trace import TraceKind, Tracer


class Graph:
    def __init__(self) -> None:
        self._adj: dict[int, set[int]] = {}
        # canonical (min, max) pairs in insertion order
        self._edges: dict[tuple[int, int], None] = {}
        self.branch: dict[int, set[int]] = {}
        self.ops = 0
        self.tracer: Tracer | None = None
        self.dropped_loops = 0
        self.dropped_duplicates = 0

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self._edges)

    @property
    def vertices(self) -> Iterable[int]:
        return self._adj.keys()

    def is_live(self, v: int) -> bool:
        return v in self._adj

    def degree(self, v: int) -> int:
        self._require_vertex(v)
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        """Return the live neighbour set of v. Callers must not mutate it."""
        self._require_vertex(v)
        adjacent = self._adj[v]
        self.ops += len(adjacent)
        return adjacent

    def adjacency(self, v: int) -> set[int]:
        """Return N(v) without charging ops. Callers must not mutate it."""
        self._require_vertex(v)
        return self._adj[v]

    def has_edge(self, v: int, w: int) -> bool:
        return v in self._adj and w in self._adj[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield live edges as (min, max) pairs in insertion order."""
        return iter(list(self._edges))

    def average_degree(self) -> Fraction:
        if not self._adj:
            raise EmptyGraph("average degree of an empty graph")

        return Fraction(2 * self.m, self.n)

    def add_vertex(self, v: int) -> None:
        if v not in self._adj:
            self._adj[v] = set()
            self.branch[v] = {v}

    def add_edge(self, v: int, w: int) -> bool:
        """Insert edge vw, returning False for self-loops and duplicates."""
        self.add_vertex(v)
        self.add_vertex(w)
        if v == w:
            self.dropped_loops += 1
            return False
        if w in self._adj[v]:
            self.dropped_duplicates += 1
            return False

        self._link(v, w)
        return True

    def delete_edge(self, v: int, w: int) -> None:
        self._require_edge(v, w)
        self._unlink(v, w)
        self.ops += 1
        self._emit(TraceKind.EDGE_DELETED, *canonical_pair(v, w))

    def delete_vertex(self, v: int) -> None:
        self._require_vertex(v)
        for u in self._adj[v]:
            self._adj[u].discard(v)
            del self._edges[canonical_pair(u, v)]
        self.ops += len(self._adj[v]) + 1
        del self._adj[v]
        del self.branch[v]
        self._emit(TraceKind.VERTEX_DELETED, v)

    def contract_edge(self, keep: int, fold: int) -> None:
        """Contract edge keep-fold into keep, dropping parallel edges."""
        if not (self.is_live(keep) and self.is_live(fold)):
            raise StaleReference(f"contraction of dead vertex {keep} or {fold}")
        if fold not in self._adj[keep]:
            raise NotAnEdge(f"{keep} and {fold} are not adjacent")

        self._unlink(keep, fold)
        keep_adj = self._adj[keep]
        fold_adj = self._adj.pop(fold)
        for u in fold_adj:
            self._adj[u].discard(fold)
            del self._edges[canonical_pair(u, fold)]
            if u not in keep_adj:
                self._link(keep, u)
        self.ops += len(fold_adj) + 1

        keep_branch, fold_branch = self.branch[keep], self.branch.pop(fold)
        if len(fold_branch) > len(keep_branch):
            keep_branch, fold_branch = fold_branch, keep_branch
        keep_branch |= fold_branch
        self.branch[keep] = keep_branch

        self._emit(TraceKind.CONTRACTED, keep, fold)

    def induced_subgraph(self, keep: Iterable[int], traced: bool = True) -> Graph:
        """Return G[keep], carrying branch sets and the op count forward.

        When traced, the dropped vertices are reported as deletions so a
        replayed trace reaches the same graph.
        """
        kept = set(keep)
        for v in kept:
            self._require_vertex(v)

        sub = Graph()
        for v in self._adj:
            if v in kept:
                sub._adj[v] = set()
                sub.branch[v] = set(self.branch[v])
        for v in sub._adj:
            for w in self._adj[v]:
                if w in kept and v < w:
                    sub._link(v, w)
            self.ops += len(self._adj[v])

        sub.ops = self.ops + self.n
        if traced and self.tracer is not None:
            sub.tracer = self.tracer
            for v in self._adj:
                if v not in kept:
                    sub._emit(TraceKind.VERTEX_DELETED, v)

        return sub

    def copy(self, reset_branches: bool = False) -> Graph:
        """Return an untraced copy; optionally restart branch sets as singletons."""
        clone = Graph()
        clone._adj = {v: set(adjacent) for v, adjacent in self._adj.items()}
        clone._edges = dict(self._edges)
        if reset_branches:
            clone.branch = {v: {v} for v in self._adj}
        else:
            clone.branch = {v: set(members) for v, members in self.branch.items()}
        clone.ops = self.ops

        return clone

    def audit(self) -> None:
        """Full-scan check of simplicity, symmetry, counts and branch disjointness."""
        degree_sum = 0
        for v, adjacent in self._adj.items():
            if v in adjacent:
                throw(f"self-loop at {v}", InternalInvariantViolation)
            for w in adjacent:
                if v not in self._adj.get(w, ()):
                    throw(f"asymmetric adjacency {v}-{w}", InternalInvariantViolation)
                if canonical_pair(v, w) not in self._edges:
                    throw(f"unindexed edge {v}-{w}", InternalInvariantViolation)
            degree_sum += len(adjacent)

        if degree_sum != 2 * len(self._edges):
            throw("degree sum does not match edge count", InternalInvariantViolation)
        if self.branch.keys() != self._adj.keys():
            throw(
                "branch map keys differ from live vertices", InternalInvariantViolation
            )

        owner: dict[int, int] = {}
        for v, members in self.branch.items():
            if not members:
                throw(f"empty branch set at {v}", InternalInvariantViolation)
            for x in members:
                if x in owner:
                    throw(
                        f"branch sets of {owner[x]} and {v} share {x}",
                        InternalInvariantViolation,
                    )
                owner[x] = v

    def audit_branches(self, original: Graph) -> None:
        """Check branch connectivity and edge witnesses against the input graph."""
        owner = {x: v for v, members in self.branch.items() for x in members}
        for v, members in self.branch.items():
            if not is_connected_set(original, members):
                throw(f"branch set of {v} is disconnected", InternalInvariantViolation)

        witnessed: set[tuple[int, int]] = set()
        for x, v in owner.items():
            for y in original.adjacency(x):
                w = owner.get(y)
                if w is not None and w != v:
                    witnessed.add(canonical_pair(v, w))
        for edge in self._edges:
            if edge not in witnessed:
                throw(
                    f"edge {edge} has no original witness", InternalInvariantViolation
                )

    def _link(self, v: int, w: int) -> None:
        self._adj[v].add(w)
        self._adj[w].add(v)
        self._edges[canonical_pair(v, w)] = None

    def _unlink(self, v: int, w: int) -> None:
        self._adj[v].discard(w)
        self._adj[w].discard(v)
        del self._edges[canonical_pair(v, w)]

    def _require_vertex(self, v: int) -> None:
        if v not in self._adj:
            raise StaleReference(f"vertex {v} is not live")

    def _require_edge(self, v: int, w: int) -> None:
        self._require_vertex(v)
        self._require_vertex(w)
        if w not in self._adj[v]:
            raise StaleReference(f"edge {v}-{w} is not live")

    def _emit(self, kind: TraceKind, *payload: int) -> None:
        if self.tracer is not None:
            self.tracer.notify(kind, *payload)


def build_graph(
    edge_list: Iterable[tuple[int, int]], n: int | None = None
) -> Graph:
    """Builds a simple Graph from an edge list.

    Duplicate edges and self-loops are dropped and counted.

    Args:
        edge_list (Iterable[tuple[int, int]]): The input edges
        n (int | None, optional): When given, vertices 0..n-1 exist even if
            isolated, and larger ids are rejected. Defaults to None.

    Raises:
        InputError: On negative, non-integer or out-of-range ids

    Returns:
        Graph: The built graph with singleton branch sets and a zero op count
    """
    graph = Graph()
    if n is not None:
        for v in range(n):
            graph.add_vertex(v)

    for pair in edge_list:
        v, w = _vertex_id(pair[0]), _vertex_id(pair[1])
        if n is not None and max(v, w) >= n:
            raise InputError(f"vertex id in {pair} exceeds n={n}")
        graph.add_edge(v, w)

    graph.ops = 0
    return graph


def is_connected_set(graph: Graph, members: Iterable[int]) -> bool:
    """Return True iff members induce a non-empty connected subgraph."""
    remaining = set(members)
    if not remaining or any(not graph.is_live(x) for x in remaining):
        return False

    start = remaining.pop()
    queue = deque([start])
    while queue:
        x = queue.popleft()
        reached = graph._adj[x] & remaining
        remaining -= reached
        queue.extend(reached)

    return not remaining


def _vertex_id(value: object) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InputError(f"malformed vertex id: {value!r}")

    return value
