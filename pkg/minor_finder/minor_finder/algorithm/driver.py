"""The K_t minor finder: preprocessing, recursion rounds and the final steps.

Recursion is a loop over the working graph. Each round normalises density,
then either shrinks the graph (Step 5 contracts an induced matching, Step 8
keeps the dense core) or stops with a model (Step 10 clique, Step 11
exhaustive search).
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from ..certificate.certificate import verify_model
from ..exceptions import InsufficientDensity, InternalInvariantViolation, NotFound
from ..graph.graph import Graph
from ..graph.minor_model import MinorModel
from ..graph.trace import TraceEvent, TraceKind
from ..handlers import check, throw
from ..logger import minor_logger
from ..oracle.minor_oracle import exhaustive_minor
from ..utils import format_fraction
from .config import Config
from .dense_matching import (
    DegreePartition,
    Matching,
    classify,
    contract_matching,
    induced_submatching,
    maximal_good_matching,
)
from .pair_assignment import (
    PairRegistry,
    PrimePartition,
    assign_pairs,
    build_prime_sets,
    dense_core,
    neighborhood_clique,
)
from .preprocess import normalize_density

__all__ = ["MinorFinder", "StepState", "TraceEvent", "find_minor", "replay_trace"]


@dataclass
class StepState:
    """Working sets of one round, kept for inspection after a run."""

    n: int
    d: Fraction
    partition: DegreePartition
    matching: Matching
    induced: Matching | None = None
    prime: PrimePartition | None = None
    registry: PairRegistry | None = None
    chosen: int | None = None


class MinorFinder:
    def __init__(
        self, graph: Graph, cfg: Config, keep_history: bool = False
    ) -> None:
        self.original = graph
        self.cfg = cfg
        self.working: Graph | None = None
        self.rounds = 0
        self.steps: list[tuple[int, int]] = []
        self.keep_history = keep_history
        self.history: list[StepState] = []
        self.found_at: int | None = None
        self.ops = 0

    def run(self) -> MinorModel:
        cfg = self.cfg
        cfg.validate()
        threshold = cfg.threshold
        actual = self.original.average_degree() if self.original.n else Fraction(0)
        if actual < threshold:
            raise InsufficientDensity(threshold, actual)

        working = self.original.copy(reset_branches=True)
        working.ops = 0
        working.tracer = cfg.trace

        while True:
            self.rounds += 1
            check(
                working.average_degree() >= threshold,
                "recursion entered with average degree below the threshold",
            )
            normalize_density(working, cfg)
            d = working.average_degree()
            n = working.n

            part = classify(working)
            matching = maximal_good_matching(working, part)
            state = StepState(n=n, d=d, partition=part, matching=matching)
            if self.keep_history:
                self.history.append(state)

            # Step 5: |M| > n / (8d)
            if 8 * d * len(matching) > n:
                induced = state.induced = induced_submatching(working, matching)
                check(
                    2 * d * d * len(induced) >= len(matching),
                    "induced submatching is smaller than |M| / (2d^2)",
                )
                contract_matching(working, induced)
                check(
                    16 * d**3 * working.n <= (16 * d**3 - 1) * n,
                    "Step 5 did not shrink the graph by a 1/(16d^3) fraction",
                )
                self._recursed(working, 5)
                continue

            pp = state.prime = build_prime_sets(part, matching)
            registry = state.registry = assign_pairs(working, pp)

            # Step 8: 2|A| >= d|B'| and B' non-empty
            if pp.big and 2 * len(registry) >= d * len(pp.big):
                check(
                    d * len(pp.big) <= 2 * len(registry) <= 2 * n,
                    "Step 8 core is larger than 2|A|/d",
                )
                working = dense_core(working, pp, registry)
                check(working.n < n, "Step 8 did not shrink the graph")
                self._recursed(working, 8)
                continue

            candidates = pp.small - registry.assignees
            check(bool(candidates), "no unassigned vertex is left in S'")
            v = state.chosen = min(candidates)

            if len(working.neighbors(v) & pp.big) >= cfg.t:
                model = neighborhood_clique(working, v, pp, registry, cfg.t)
                self._found(working, 10)
            else:
                model = self._exhaustive_step(working, v, pp, d)
                self._found(working, 11)
            break

        self.working = working
        self.ops = working.ops
        verdict = verify_model(self.original, model, cfg.t)
        if not verdict.valid:
            throw(
                f"returned model failed verification: {verdict.violations}",
                InternalInvariantViolation,
            )

        return model

    def _exhaustive_step(
        self, working: Graph, v: int, pp: PrimePartition, d: Fraction
    ) -> MinorModel:
        cfg = self.cfg
        small_neighbors = working.neighbors(v) & pp.small
        check(
            len(small_neighbors) <= d * d,
            "Step 11 subgraph exceeds d^2 + 1 vertices",
        )
        if cfg.strict:
            check(bool(small_neighbors), f"vertex {v} has no neighbour in S'")

        sub = working.induced_subgraph(small_neighbors | {v}, traced=False)
        if cfg.strict:
            check(
                sub.average_degree() >= cfg.g_value,
                "Step 11 subgraph is sparser than g(t)",
            )

        model = exhaustive_minor(sub, cfg.t)
        working.ops = max(working.ops, sub.ops)
        if model is not None:
            return model

        if cfg.strict:
            throw("exhaustive search failed in strict mode", InternalInvariantViolation)

        waived = []
        if cfg.g_value < cfg.t:
            waived.append(f"g(t) = {format_fraction(cfg.g_value)} < t = {cfg.t}")
        if cfg.g_value < 2 * cfg.t / cfg.epsilon:
            waived.append(
                f"epsilon = {format_fraction(cfg.epsilon)} is too small "
                f"for g(t) >= 2t/epsilon"
            )
        reason = "; ".join(waived) or "g(t) is configured below the true extremal value"
        throw(f"no K_{cfg.t} minor in the Step 11 subgraph ({reason})", NotFound)

    def _recursed(self, working: Graph, step: int) -> None:
        self.steps.append((step, working.n))
        minor_logger.info(f"round {self.rounds}: Step {step} recursed on n={working.n}")
        if working.tracer is not None:
            working.tracer.notify(TraceKind.RECURSED, step, working.n)

    def _found(self, working: Graph, step: int) -> None:
        self.found_at = step
        minor_logger.info(f"round {self.rounds}: K_{self.cfg.t} found at Step {step}")
        if working.tracer is not None:
            working.tracer.notify(TraceKind.FOUND, step)


def find_minor(graph: Graph, cfg: Config) -> MinorModel:
    """Find a K_t minor in a graph with d(G) >= (2 + epsilon) g(t).

    The input graph is not mutated. The returned model is verified against it.

    Args:
        graph (Graph): The input graph
        cfg (Config): The run configuration

    Raises:
        InsufficientDensity: If the input is below the density threshold
        NotFound: If the non-strict Step 11 search comes up empty
        InternalInvariantViolation: If a proved property fails at runtime

    Returns:
        MinorModel: A verified K_t model over the input's vertex ids
    """
    return MinorFinder(graph, cfg).run()


def replay_trace(original: Graph, events: Iterable[TraceEvent]) -> Graph:
    """Re-apply recorded deletions and contractions to a copy of original."""
    graph = original.copy(reset_branches=True)
    for event in events:
        if event.kind is TraceKind.EDGE_DELETED:
            graph.delete_edge(*event.payload)
        elif event.kind is TraceKind.VERTEX_DELETED:
            graph.delete_vertex(*event.payload)
        elif event.kind is TraceKind.CONTRACTED:
            graph.contract_edge(*event.payload)

    return graph
