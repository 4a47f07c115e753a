"""Seeded graph generators for tests and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

import networkx as nx

from ..exceptions import InputError
from ..graph.graph import Graph, build_graph
from ..graph.minor_model import MinorModel


def gen_random(n: int, m: int, seed: int) -> Graph:
    """Uniform simple graph on n vertices with exactly m edges.

    Raises:
        InputError: If m exceeds n(n-1)/2
    """
    if n < 0 or m < 0:
        raise InputError(f"n and m must be non-negative, got n={n} m={m}")
    if m > n * (n - 1) // 2:
        raise InputError(f"{m} edges do not fit in a simple graph on {n} vertices")

    generated = nx.gnm_random_graph(n, m, seed=seed)
    return build_graph(generated.edges(), n=n)


def gen_planted(n: int, t: int, noise_m: int, seed: int) -> tuple[Graph, MinorModel]:
    """Graph with a planted K_t minor, and the planted model.

    t * (n // t) vertices are split into t blobs, each joined by a random
    spanning tree; each pair of blobs gets one random cross edge; then up to
    noise_m extra random edges are added. Leftover vertices stay isolated
    unless noise reaches them.

    Raises:
        InputError: If n < t
    """
    if t < 1 or n < t:
        raise InputError(f"planting K_{t} needs at least t vertices, got n={n}")

    rng = random.Random(seed)
    order = list(range(n))
    rng.shuffle(order)
    size = n // t
    blobs = [order[i * size : (i + 1) * size] for i in range(t)]

    edges: set[tuple[int, int]] = set()

    def add(v: int, w: int) -> None:
        edges.add((min(v, w), max(v, w)))

    for blob in blobs:
        for index in range(1, len(blob)):
            add(blob[index], blob[rng.randrange(index)])
    for first, second in combinations(blobs, 2):
        add(rng.choice(first), rng.choice(second))

    free = n * (n - 1) // 2 - len(edges)
    for _ in range(min(noise_m, free)):
        while True:
            v, w = rng.sample(range(n), 2)
            if (min(v, w), max(v, w)) not in edges:
                add(v, w)
                break

    graph = build_graph(sorted(edges), n=n)
    return graph, MinorModel.from_sets(blobs)
