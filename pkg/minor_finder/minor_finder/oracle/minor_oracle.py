"""Exhaustive K_t minor search (Step 11) and an independent brute-force oracle."""

from __future__ import annotations

from itertools import combinations

from ..constants import PARTITION_ORACLE_MAX_VERTICES
from ..exceptions import SizeLimit
from ..graph.graph import Graph, is_connected_set
from ..graph.minor_model import MinorModel
from ..logger import minor_logger

Frozen = frozenset[tuple[int, int]]


def find_clique(graph: Graph, t: int) -> list[int] | None:
    """Return t pairwise adjacent vertices, or None."""
    if t <= 0:
        return []

    candidates = sorted(v for v in graph.vertices if graph.degree(v) >= t - 1)

    def extend(clique: list[int], pool: list[int]) -> list[int] | None:
        if len(clique) == t:
            return clique
        for index, v in enumerate(pool):
            if len(clique) + len(pool) - index < t:
                return None
            adjacent = graph.neighbors(v)
            rest = [w for w in pool[index + 1 :] if w in adjacent]
            found = extend(clique + [v], rest)
            if found is not None:
                return found
        return None

    return extend([], candidates)


def exhaustive_minor(
    graph: Graph, t: int, memoize: bool = False
) -> MinorModel | None:
    """Search for a K_t minor by branching on contract-then-freeze.

    The branching edge is the lexicographically smallest live edge that is
    not frozen. A frozen edge is never contracted but stays in the graph as
    an adjacency witness; frozen marks touching a contracted vertex are
    released. The search runs on copies, so the input graph is not mutated
    apart from its op count, which is charged with the work of every search
    state. Branch sets of the result are taken from the input's branch map.

    Args:
        graph (Graph): The graph to search
        t (int): The clique order
        memoize (bool, optional): Skip states already explored, keyed by
            vertex, edge and frozen-edge sets. Defaults to False.

    Returns:
        MinorModel | None: A K_t model, or None when the graph has no K_t minor
    """
    needed_edges = t * (t - 1) // 2
    seen: set[tuple[frozenset[int], frozenset[tuple[int, int]], Frozen]] = set()
    stack: list[tuple[Graph, Frozen]] = [(graph.copy(), frozenset())]
    explored = spent = 0

    def expand(current: Graph, frozen: Frozen) -> MinorModel | None:
        nonlocal spent
        if current.n < t or current.m < needed_edges:
            return None

        clique = find_clique(current, t)
        if clique is not None:
            return MinorModel.from_sets(current.branch[v] for v in clique)

        if memoize:
            key = (frozenset(current.vertices), frozenset(current.edges()), frozen)
            if key in seen:
                return None
            seen.add(key)

        free = [edge for edge in current.edges() if edge not in frozen]
        if not free:
            return None

        v, w = min(free)
        contracted = current.copy()
        contracted.contract_edge(v, w)
        spent += contracted.ops - current.ops
        released = frozenset(edge for edge in frozen if w not in edge)
        stack.append((current, frozen | {(v, w)}))
        stack.append((contracted, released))
        return None

    model = None
    while stack and model is None:
        current, frozen = stack.pop()
        explored += 1
        before = current.ops
        model = expand(current, frozen)
        spent += current.ops - before

    graph.ops += spent
    if model is None:
        minor_logger.debug(f"no K_{t} minor after {explored} search states")
    else:
        minor_logger.debug(f"K_{t} found after {explored} search states")

    return model


def partition_oracle(graph: Graph, t: int) -> bool:
    """Decide K_t minor existence by enumerating vertex labellings.

    Each vertex gets a label in {none, 1..t}; labels are opened in order of
    first use so each family of sets is visited once.

    Raises:
        SizeLimit: If the graph has more than 10 vertices
    """
    vertices = sorted(graph.vertices)
    n = len(vertices)
    if n > PARTITION_ORACLE_MAX_VERTICES:
        raise SizeLimit(
            f"partition oracle is limited to {PARTITION_ORACLE_MAX_VERTICES} "
            f"vertices, got {n}"
        )
    if t <= 0:
        return True

    sets: list[set[int]] = [set() for _ in range(t)]

    def is_model() -> bool:
        if not all(is_connected_set(graph, members) for members in sets):
            return False
        return all(
            any(graph.has_edge(x, y) for x in first for y in second)
            for first, second in combinations(sets, 2)
        )

    def assign(index: int, used: int) -> bool:
        if n - index < t - used:
            return False
        if index == n:
            return is_model()

        v = vertices[index]
        if assign(index + 1, used):
            return True
        for label in range(min(used + 1, t)):
            sets[label].add(v)
            found = assign(index + 1, max(used, label + 1))
            sets[label].discard(v)
            if found:
                return True
        return False

    return assign(0, 0)


def hadwiger_number(
    graph: Graph, limit: int | None = None
) -> tuple[int, MinorModel | None]:
    """Largest t (at most limit) with a K_t minor, and its witness.

    Relies on K_t minors implying K_(t-1) minors, so the scan stops at the
    first failure.
    """
    best, witness = 0, None
    t = 1
    while limit is None or t <= limit:
        model = exhaustive_minor(graph, t)
        if model is None:
            break
        best, witness = t, model
        t += 1

    return best, witness
