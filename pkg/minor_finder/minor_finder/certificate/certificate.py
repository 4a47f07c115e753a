"""Independent verification of K_t minor models against the input graph."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from ..exceptions import InputError
from ..graph.graph import Graph, is_connected_set
from ..graph.minor_model import MinorModel
from ..utils import canonical_pair


@dataclass
class Verdict:
    violations: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def verify_model(original: Graph, model: MinorModel, t: int) -> Verdict:
    """Check that model is a K_t minor model of original.

    All failures are reported, in this order: set count, empty sets,
    overlaps, disconnected sets, non-adjacent pairs. Branch sets need not
    cover the graph.

    Args:
        original (Graph): The input graph
        model (MinorModel): The claimed model
        t (int): The clique order

    Raises:
        InputError: If the model names a vertex the graph does not have

    Returns:
        Verdict: The verdict, valid iff it lists no violations
    """
    sets = model.branch_sets
    for members in sets:
        for x in members:
            if not original.is_live(x):
                raise InputError(f"model references unknown vertex {x}")

    verdict = Verdict()
    if len(sets) != t:
        verdict.violations.append(f"expected {t} branch sets, got {len(sets)}")

    for i, members in enumerate(sets):
        if not members:
            verdict.violations.append(f"branch set {i} is empty")

    owner: dict[int, int] = {}
    for i, members in enumerate(sets):
        for x in sorted(members):
            if x in owner:
                verdict.violations.append(
                    f"branch sets {owner[x]} and {i} share vertex {x}"
                )
            else:
                owner[x] = i

    for i, members in enumerate(sets):
        if members and not is_connected_set(original, members):
            verdict.violations.append(f"branch set {i} is not connected")

    joined: set[tuple[int, int]] = set()
    for x, i in owner.items():
        for y in original.adjacency(x):
            j = owner.get(y)
            if j is not None and j != i:
                joined.add(canonical_pair(i, j))
    # a vertex shared by two sets also joins them
    for i, j in combinations(range(len(sets)), 2):
        if (i, j) not in joined and not (sets[i] & sets[j]):
            verdict.violations.append(f"branch sets {i} and {j} are not adjacent")

    return verdict
