"""Directed-graph reduction: Hamiltonian path decided through the fleet model.

A digraph on n vertices maps to a fleet where vertex i becomes a vehicle
with capacity i and rate 1/2. For that fleet, a full sequence's distance is
``sum of capacity[pos i] / (n - i)`` (0-based), which is at least n for
every permutation and exactly n only for the descending order. Requiring
distance >= n therefore accepts precisely the sequences that exist at all,
and the graph's edges decide which sequences exist:

* forbidden semantics (default): a non-edge pair may not be consecutive,
  so admissible full sequences correspond one-to-one with Hamiltonian
  paths and the threshold decision matches path existence.
* zero-distance semantics: non-edge consecutive pairs are allowed but
  contribute nothing. :func:`semantics_probe` evaluates this reading
  empirically and reports whether it still matches path existence; it
  asserts nothing about the outcome.

An independent backtracking search over simple paths provides ground truth
for cross-validation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .core import Instance, Sequence, Vehicle, segment_distances
from .errors import CapacityError, DisagreementError, NvepError
from .solvers import BRUTE_FORCE_CAP, decide_nvep

SEMANTICS = ("forbidden", "zero")


@dataclass(frozen=True)
class Digraph:
    """A directed graph with 1-indexed vertices and no self-loops."""

    vertex_count: int
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((int(u), int(v)) for u, v in self.edges))
        n = self.vertex_count
        if n < 1:
            raise ValueError("a digraph needs at least one vertex")
        for u, v in self.edges:
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def successors(self, u: int) -> tuple[int, ...]:
        return tuple(sorted(v for (a, v) in self.edges if a == u))

    def successor_map(self) -> dict:
        out = {u: [] for u in range(1, self.vertex_count + 1)}
        for u, v in sorted(self.edges):
            out[u].append(v)
        return out


@dataclass(frozen=True)
class Path:
    """A walk through distinct vertices, 1-indexed."""

    vertices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))


@dataclass(frozen=True)
class DecodeRejection:
    """Why a sequence failed to decode into a path of the graph."""

    reason: str
    pair: tuple[int, int] | None = None
    position: int | None = None


@dataclass(frozen=True)
class ProbeReport:
    """Findings of one zero-distance-semantics probe run."""

    vertex_count: int
    edge_count: int
    threshold: Fraction
    max_distance: Fraction
    max_order: tuple[int, ...]
    meets_threshold: bool
    hamiltonian: bool
    agrees: bool
    disagreement_witness: tuple[int, ...] | None

    def to_lines(self) -> list[str]:
        def yes(flag: bool) -> str:
            return "yes" if flag else "no"

        lines = [
            f"vertices: {self.vertex_count}",
            f"edges: {self.edge_count}",
            f"threshold: {self.threshold}",
            f"max-distance: {self.max_distance}",
            f"max-order: {' '.join(str(i) for i in self.max_order)}",
            f"meets-threshold: {yes(self.meets_threshold)}",
            f"hamiltonian: {yes(self.hamiltonian)}",
            f"agrees: {yes(self.agrees)}",
        ]
        if self.disagreement_witness is not None:
            lines.append(
                "witness: " + " ".join(str(i) for i in self.disagreement_witness)
            )
        return lines


def reduce_graph(g: Digraph, semantics: str = "forbidden") -> Instance:
    """Build the fleet instance for ``g``: capacity i, rate 1/2 per vertex.

    Under ``"forbidden"`` semantics the graph's edges become the allowed
    consecutive pairs and every vehicle may finish (each vertex owns an
    edge to its own virtual endpoint). Under ``"zero"`` semantics the
    instance is unconstrained; pair :func:`zero_adjusted_distance` with it
    to zero out non-edge contributions instead. Runs in time polynomial in
    the graph size.
    """
    if semantics not in SEMANTICS:
        raise ValueError(f"unknown semantics {semantics!r}; expected one of {SEMANTICS}")
    n = g.vertex_count
    vehicles = tuple(Vehicle(Fraction(i), Fraction(1, 2)) for i in range(1, n + 1))
    if semantics == "zero":
        return Instance(vehicles)
    pairs = {(u - 1, v - 1) for u, v in g.edges}
    return Instance.with_constraints(vehicles, allowed_pairs=pairs, allowed_last=range(n))


def sequence_to_vertices(seq: Sequence) -> tuple[int, ...]:
    """0-based vehicle order -> 1-indexed vertex order."""
    return tuple(i + 1 for i in seq.order)


def vertices_to_sequence(vertices) -> Sequence:
    """1-indexed vertex order -> 0-based vehicle order."""
    return Sequence(tuple(v - 1 for v in vertices))


def decode_sequence(g: Digraph, seq: Sequence):
    """Read a sequence back as a path of ``g``.

    Returns a :class:`Path` when every consecutive pair is an edge, else a
    :class:`DecodeRejection` naming the first violation. Total: malformed
    input is a rejection, not an error.
    """
    if not isinstance(seq, Sequence) or not seq.is_permutation(g.vertex_count):
        return DecodeRejection("not a permutation of the graph's vertices")
    vertices = sequence_to_vertices(seq)
    for i in range(len(vertices) - 1):
        pair = (vertices[i], vertices[i + 1])
        if pair not in g.edges:
            return DecodeRejection("consecutive pair is not an edge", pair, i + 1)
    return Path(vertices)


def verify_path(g: Digraph, p: Path) -> bool:
    """True iff ``p`` visits every vertex exactly once along edges of ``g``."""
    if not isinstance(p, Path):
        return False
    vertices = p.vertices
    if sorted(vertices) != list(range(1, g.vertex_count + 1)):
        return False
    return all(
        (vertices[i], vertices[i + 1]) in g.edges for i in range(len(vertices) - 1)
    )


def hp_oracle_backtracking(g: Digraph) -> tuple[bool, Path | None]:
    """Independent Hamiltonian-path search: DFS over simple paths.

    Tries every start vertex in ascending order and extends along edges in
    ascending order, pruning any state from which some unvisited vertex is
    unreachable. Deterministic; practical for desk-scale graphs.
    """
    n = g.vertex_count
    succ = g.successor_map()
    if n == 1:
        return True, Path((1,))

    def all_reachable(current: int, visited: set) -> bool:
        seen = {current}
        frontier = [current]
        while frontier:
            u = frontier.pop()
            for v in succ[u]:
                if v not in seen and v not in visited:
                    seen.add(v)
                    frontier.append(v)
        return len(seen) == n - len(visited) + 1

    path: list[int] = []

    def extend(v: int, visited: set) -> bool:
        path.append(v)
        if len(path) == n:
            return True
        visited.add(v)
        if all_reachable(v, visited):
            for w in succ[v]:
                if w not in visited and extend(w, visited):
                    return True
        visited.remove(v)
        path.pop()
        return False

    for start in range(1, n + 1):
        if extend(start, set()):
            return True, Path(tuple(path))
    return False, None


def decide_hamiltonian_path(g: Digraph, via: str = "both") -> tuple[bool, Path | None]:
    """Does ``g`` have a Hamiltonian path?

    ``via="nvep"`` reduces the graph (forbidden semantics), asks the exact
    fleet solver whether some admissible sequence reaches distance >= n,
    and decodes the witness. ``via="backtrack"`` runs the independent
    oracle. ``via="both"`` runs both and raises
    :class:`DisagreementError` if they differ (they must not).
    """
    if via not in ("nvep", "backtrack", "both"):
        raise ValueError(f"unknown route {via!r}; expected nvep, backtrack or both")
    if via == "nvep":
        return _decide_via_nvep(g)
    if via == "backtrack":
        return hp_oracle_backtracking(g)
    nvep_found, nvep_path = _decide_via_nvep(g)
    oracle_found, oracle_path = hp_oracle_backtracking(g)
    report = {
        "vertices": g.vertex_count,
        "edges": g.edge_count,
        "nvep-answer": "yes" if nvep_found else "no",
        "backtrack-answer": "yes" if oracle_found else "no",
    }
    if nvep_path is not None:
        report["nvep-path"] = " ".join(str(v) for v in nvep_path.vertices)
    if oracle_path is not None:
        report["backtrack-path"] = " ".join(str(v) for v in oracle_path.vertices)
    if nvep_found != oracle_found:
        raise DisagreementError("solver routes disagree on Hamiltonian path", report)
    for label, witness in (("nvep", nvep_path), ("backtrack", oracle_path)):
        if witness is not None and not verify_path(g, witness):
            report["invalid-witness"] = label
            raise DisagreementError(f"{label} witness failed path verification", report)
    return nvep_found, nvep_path


def _decide_via_nvep(g: Digraph) -> tuple[bool, Path | None]:
    instance = reduce_graph(g, "forbidden")
    found, witness = decide_nvep(instance, Fraction(g.vertex_count))
    if not found:
        return False, None
    decoded = decode_sequence(g, witness)
    if isinstance(decoded, DecodeRejection):
        raise NvepError(f"solver witness failed decoding: {decoded.reason}")
    return True, decoded


def zero_adjusted_distance(g: Digraph, seq: Sequence, instance: Instance | None = None) -> Fraction:
    """Sequence distance with non-edge consecutive contributions zeroed.

    The final position's contribution always counts (every vertex owns an
    edge to its own endpoint marker). ``instance`` defaults to the
    unconstrained reduction of ``g``.
    """
    if instance is None:
        instance = reduce_graph(g, "zero")
    segments = segment_distances(instance, seq)
    vertices = sequence_to_vertices(seq)
    total = Fraction(0)
    for i, d in enumerate(segments):
        if i + 1 < len(vertices) and (vertices[i], vertices[i + 1]) not in g.edges:
            continue
        total += d
    return total


def semantics_probe(g: Digraph, *, cap: int = BRUTE_FORCE_CAP) -> ProbeReport:
    """Exhaustively test the zero-distance reading against ground truth.

    Enumerates every permutation, zeroes non-edge contributions, and
    reports whether "max adjusted distance >= n" matches Hamiltonian-path
    existence. The report records the finding either way; disagreements
    carry the maximising order as a witness.
    """
    n = g.vertex_count
    if n > cap:
        raise CapacityError(f"probe refuses n={n} above cap {cap}")
    instance = reduce_graph(g, "zero")
    best = None
    best_order = None
    for perm in itertools.permutations(range(n)):
        value = zero_adjusted_distance(g, Sequence(perm), instance)
        if best is None or value > best:
            best = value
            best_order = perm
    threshold = Fraction(n)
    meets = best >= threshold
    hamiltonian, _ = hp_oracle_backtracking(g)
    agrees = meets == hamiltonian
    witness = None if agrees else tuple(i + 1 for i in best_order)
    return ProbeReport(
        vertex_count=n,
        edge_count=g.edge_count,
        threshold=threshold,
        max_distance=best,
        max_order=tuple(i + 1 for i in best_order),
        meets_threshold=meets,
        hamiltonian=hamiltonian,
        agrees=agrees,
        disagreement_witness=witness,
    )
