"""Steps 6 to 10: prime sets, pair assignment, dense core and the clique step."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..exceptions import GuardViolation, InternalInvariantViolation
from ..graph.graph import Graph
from ..graph.minor_model import MinorModel
from ..handlers import check, throw
from .dense_matching import DegreePartition, Matching


@dataclass(frozen=True)
class PrimePartition:
    """B' = B plus the matched vertices, S' = the unmatched small vertices."""

    big: frozenset[int]
    small: frozenset[int]


@dataclass
class PairRegistry:
    """Assignment of vertices of A to distinct pairs of B'-vertices.

    Pairs are keyed canonically as (min id, max id).
    """

    assigned: dict[tuple[int, int], int] = field(default_factory=dict)
    pair_of: dict[int, tuple[int, int]] = field(default_factory=dict)

    @property
    def assignees(self) -> set[int]:
        return set(self.pair_of)

    def __len__(self) -> int:
        return len(self.pair_of)

    def assign(self, pair: tuple[int, int], z: int) -> None:
        self.assigned[pair] = z
        self.pair_of[z] = pair


def build_prime_sets(part: DegreePartition, matching: Matching) -> PrimePartition:
    check(
        not (matching.matched & part.big),
        "a matched vertex has big degree",
    )
    big = part.big | matching.matched

    return PrimePartition(frozenset(big), frozenset(part.small - matching.matched))


def assign_pairs(graph: Graph, pp: PrimePartition) -> PairRegistry:
    """Greedily assign each S'-vertex to the first free pair of its B'-neighbours.

    Vertices are scanned by ascending id and pairs in lexicographic order.
    """
    registry = PairRegistry()
    if not pp.big:
        return registry

    for u in sorted(pp.small):
        adjacent = sorted(graph.neighbors(u) & pp.big)
        for pair in combinations(adjacent, 2):
            if pair not in registry.assigned:
                registry.assign(pair, u)
                break

    return registry


def dense_core(graph: Graph, pp: PrimePartition, registry: PairRegistry) -> Graph:
    """Contract every assigned z into the smaller vertex of its pair; return G[B'].

    Raises:
        GuardViolation: Unless B' is non-empty and 2|A| >= d|B'|
    """
    d = graph.average_degree()
    if not pp.big or 2 * len(registry) < d * len(pp.big):
        throw(
            "dense core requested without 2|A| >= d|B'| and B' non-empty",
            GuardViolation,
        )

    for (x, _y), z in registry.assigned.items():
        graph.contract_edge(x, z)

    core = graph.induced_subgraph(pp.big)
    check(core.m >= len(registry), "dense core lost an assigned edge")
    check(
        core.average_degree() >= d,
        "dense core average degree is below the working average degree",
    )

    return core


def neighborhood_clique(
    graph: Graph,
    v: int,
    pp: PrimePartition,
    registry: PairRegistry,
    t: int,
) -> MinorModel:
    """Complete N(v) & B' by contracting assigned vertices; return a K_t model.

    Every pair of B'-neighbours of an unassigned v already has an assignee,
    otherwise v itself would have been assigned to that pair.
    """
    adjacent = sorted(graph.neighbors(v) & pp.big)
    check(len(adjacent) >= t, f"vertex {v} has fewer than {t} neighbours in B'")

    for pair in combinations(adjacent, 2):
        z = registry.assigned.get(pair)
        if z is None:
            throw(
                f"pair {pair} in N({v}) has no assigned vertex",
                InternalInvariantViolation,
            )
        graph.contract_edge(pair[0], z)

    chosen = adjacent[:t]
    for x, y in combinations(chosen, 2):
        if not graph.has_edge(x, y):
            throw(
                f"{x} and {y} are not adjacent after contraction",
                InternalInvariantViolation,
            )

    return MinorModel.from_sets(graph.branch[x] for x in chosen)
