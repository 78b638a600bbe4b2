"""Seeded generators for instances and digraphs.

Every generator is deterministic for a fixed seed, which keeps validation
suites and CLI output reproducible byte for byte.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import Instance, Vehicle
from .reduction import Digraph

GRAPH_FAMILIES = ("random", "path", "cycle", "edgeless", "two-cliques")


def random_instance(
    n: int,
    seed: int,
    *,
    max_numerator: int = 10,
    max_denominator: int = 6,
) -> Instance:
    """Unconstrained instance with capacities and rates drawn as p/q,
    p in 1..max_numerator and q in 1..max_denominator."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if max_numerator < 1 or max_denominator < 1:
        raise ValueError("rational ranges must be at least 1")
    rng = random.Random(seed)

    def draw() -> Fraction:
        return Fraction(rng.randint(1, max_numerator), rng.randint(1, max_denominator))

    return Instance(tuple(Vehicle(draw(), draw()) for _ in range(n)))


def random_digraph(n: int, density: float, seed: int) -> Digraph:
    """Erdos-Renyi style digraph: each ordered pair is an edge with
    probability ``density``."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= density <= 1:
        raise ValueError(f"density must be within [0, 1], got {density}")
    rng = random.Random(seed)
    edges = set()
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            if u != v and rng.random() < density:
                edges.add((u, v))
    return Digraph(n, frozenset(edges))


def path_digraph(n: int) -> Digraph:
    """Directed path 1 -> 2 -> ... -> n (always has a Hamiltonian path)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Digraph(n, frozenset((i, i + 1) for i in range(1, n)))


def cycle_digraph(n: int) -> Digraph:
    """Directed cycle through all vertices (always has a Hamiltonian path)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n == 1:
        return Digraph(1, frozenset())
    edges = {(i, i + 1) for i in range(1, n)}
    edges.add((n, 1))
    return Digraph(n, frozenset(edges))


def edgeless_digraph(n: int) -> Digraph:
    """No edges at all (no Hamiltonian path for n >= 2)."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Digraph(n, frozenset())


def two_cliques_digraph(n: int) -> Digraph:
    """Two complete halves with no edges between them.

    Disconnected for n >= 2, hence a guaranteed "no" instance.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    half = (n + 1) // 2
    edges = set()
    for group in (range(1, half + 1), range(half + 1, n + 1)):
        for u in group:
            for v in group:
                if u != v:
                    edges.add((u, v))
    return Digraph(n, frozenset(edges))


def graph_family(family: str, n: int, *, density: float = 0.5, seed: int = 0) -> Digraph:
    """Dispatch by family name; see :data:`GRAPH_FAMILIES`."""
    if family == "random":
        return random_digraph(n, density, seed)
    if family == "path":
        return path_digraph(n)
    if family == "cycle":
        return cycle_digraph(n)
    if family == "edgeless":
        return edgeless_digraph(n)
    if family == "two-cliques":
        return two_cliques_digraph(n)
    raise ValueError(f"unknown graph family {family!r}; expected one of {GRAPH_FAMILIES}")
