"""Shared independent oracles for the test suite.

These are deliberately naive transcriptions of the model definitions:
plain Fraction arithmetic, itertools enumeration, literal nested loops.
They never touch the solver machinery they are used to check.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from nvep import Digraph, Instance


def naive_distance(caps, rates, order) -> Fraction:
    """Total distance, straight from the closed form."""
    total = Fraction(0)
    for i in range(len(order)):
        tail_rate = sum((rates[k] for k in order[i:]), Fraction(0))
        total += Fraction(1, 2) * (caps[order[i]] / tail_rate)
    return total


def naive_segments(caps, rates, order) -> list[Fraction]:
    segments = []
    for i in range(len(order)):
        tail_rate = sum((rates[k] for k in order[i:]), Fraction(0))
        segments.append(caps[order[i]] / (2 * tail_rate))
    return segments


def feasible_by_definition(caps, rates, order, distances) -> bool:
    """Literal nested fuel-balance inequalities."""
    n = len(order)
    for k in range(n):
        lhs = Fraction(0)
        rhs = Fraction(0)
        for i in range(k, n):
            tail_rate = sum((rates[j] for j in order[i:]), Fraction(0))
            lhs += 2 * distances[i] * tail_rate
            rhs += caps[order[i]]
        if lhs > rhs:
            return False
    return True


def sequence_allowed(instance: Instance, order) -> bool:
    for i in range(len(order) - 1):
        if not instance.allows(order[i], order[i + 1]):
            return False
    return instance.allows_last(order[-1])


def exhaustive_best(instance: Instance):
    """(max distance, lexicographically smallest argmax order) or (None, None)."""
    caps = instance.capacities
    rates = instance.rates
    best = None
    best_order = None
    for perm in itertools.permutations(range(instance.n)):
        if instance.constrained and not sequence_allowed(instance, perm):
            continue
        value = naive_distance(caps, rates, perm)
        if best is None or value > best:
            best = value
            best_order = perm
    return best, best_order


def exhaustive_hamiltonian(g: Digraph):
    """(exists, lexicographically smallest witness order) by full enumeration."""
    n = g.vertex_count
    for perm in itertools.permutations(range(1, n + 1)):
        if all((perm[i], perm[i + 1]) in g.edges for i in range(n - 1)):
            return True, perm
    return False, None
