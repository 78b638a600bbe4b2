"""Exact fuel-balance model for vehicle refueling sequences.

A fleet of vehicles leaves a common start point together. The vehicle at
position ``i`` of a sequence carries the convoy for one segment, tops up
every later vehicle, and turns back. The distance reached by the final
vehicle decomposes into per-position segment lengths whose feasibility is
governed by a nested system of fuel-balance inequalities.

Everything here is computed with :class:`fractions.Fraction`. The decision
problems built on top of this module are resolved at exact equality
boundaries, so no correctness-bearing path may touch floating point;
:func:`as_rational` rejects floats outright.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInputError, MalformedSequenceError

RationalLike = Fraction | int | str

HALF = Fraction(1, 2)


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact Fraction, refusing floats outright."""
    if isinstance(value, float):
        raise TypeError(
            f"refusing to coerce float {value!r}; pass a Fraction, an int, "
            "or a 'p/q' string"
        )
    return Fraction(value)


@dataclass(frozen=True)
class Vehicle:
    """One vehicle: total fuel carried and fuel burned per unit distance."""

    capacity: Fraction
    rate: Fraction

    def __post_init__(self):
        object.__setattr__(self, "capacity", as_rational(self.capacity))
        object.__setattr__(self, "rate", as_rational(self.rate))
        if self.capacity <= 0:
            raise ValueError(f"vehicle capacity must be positive, got {self.capacity}")
        if self.rate <= 0:
            raise ValueError(f"vehicle rate must be positive, got {self.rate}")


@dataclass(frozen=True)
class Instance:
    """A fleet, with optional constraints on which orders are admissible.

    ``adjacency[i][j]`` being true means vehicle ``j`` may immediately
    follow vehicle ``i``; ``None`` means every pair is allowed. The
    diagonal is meaningless (a vehicle never follows itself) and is
    normalised to ``False``. ``terminal_allowed[i]`` being true means
    vehicle ``i`` may occupy the last position; ``None`` allows every
    vehicle. Instances are validated here, once; operations assume a
    valid instance and stay branch-free.
    """

    vehicles: tuple[Vehicle, ...]
    adjacency: tuple[tuple[bool, ...], ...] | None = None
    terminal_allowed: tuple[bool, ...] | None = None

    def __post_init__(self):
        vehicles = tuple(self.vehicles)
        object.__setattr__(self, "vehicles", vehicles)
        n = len(vehicles)
        if n < 1:
            raise ValueError("an instance needs at least one vehicle")
        if not all(isinstance(v, Vehicle) for v in vehicles):
            raise TypeError("vehicles must be Vehicle values")
        if self.adjacency is not None:
            rows = tuple(tuple(bool(x) for x in row) for row in self.adjacency)
            if len(rows) != n or any(len(row) != n for row in rows):
                raise ValueError(f"adjacency must be {n}x{n}")
            # diagonal is never consulted; normalise so equality is canonical
            rows = tuple(
                tuple(False if i == j else row[j] for j in range(n))
                for i, row in enumerate(rows)
            )
            object.__setattr__(self, "adjacency", rows)
        if self.terminal_allowed is not None:
            flags = tuple(bool(x) for x in self.terminal_allowed)
            if len(flags) != n:
                raise ValueError(f"terminal_allowed must have length {n}")
            object.__setattr__(self, "terminal_allowed", flags)

    @classmethod
    def unconstrained(cls, capacities, rates) -> "Instance":
        """Build an unconstrained instance from parallel capacity/rate lists."""
        caps = list(capacities)
        rts = list(rates)
        if len(caps) != len(rts):
            raise ValueError("capacities and rates must have equal length")
        return cls(tuple(Vehicle(c, r) for c, r in zip(caps, rts)))

    @classmethod
    def with_constraints(cls, vehicles, allowed_pairs=None, allowed_last=None) -> "Instance":
        """Build an instance from a set of allowed (i, j) pairs, 0-based.

        ``allowed_pairs=None`` leaves adjacency unconstrained;
        ``allowed_last=None`` leaves the final position unconstrained.
        """
        vehicles = tuple(vehicles)
        n = len(vehicles)
        adjacency = None
        if allowed_pairs is not None:
            matrix = [[False] * n for _ in range(n)]
            for i, j in allowed_pairs:
                if not (0 <= i < n and 0 <= j < n):
                    raise ValueError(f"allowed pair ({i}, {j}) out of range")
                if i != j:
                    matrix[i][j] = True
            adjacency = tuple(tuple(row) for row in matrix)
        terminal = None
        if allowed_last is not None:
            allowed = set(allowed_last)
            terminal = tuple(i in allowed for i in range(n))
        return cls(vehicles, adjacency, terminal)

    @property
    def n(self) -> int:
        return len(self.vehicles)

    @property
    def capacities(self) -> tuple[Fraction, ...]:
        return tuple(v.capacity for v in self.vehicles)

    @property
    def rates(self) -> tuple[Fraction, ...]:
        return tuple(v.rate for v in self.vehicles)

    @property
    def constrained(self) -> bool:
        """Whether any adjacency or last-position constraint is present."""
        return self.adjacency is not None or self.terminal_allowed is not None

    def allows(self, i: int, j: int) -> bool:
        """May vehicle ``j`` immediately follow vehicle ``i``?"""
        return self.adjacency is None or self.adjacency[i][j]

    def allows_last(self, i: int) -> bool:
        """May vehicle ``i`` occupy the final position?"""
        return self.terminal_allowed is None or self.terminal_allowed[i]


@dataclass(frozen=True)
class Sequence:
    """An ordering of vehicle indices, 0-based.

    Construction does not validate permutation-ness: certificate checking
    must be able to represent (and reject) malformed candidates. Operations
    that require a permutation raise :class:`MalformedSequenceError`.
    """

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(i) for i in self.order))

    def __len__(self) -> int:
        return len(self.order)

    def is_permutation(self, n: int) -> bool:
        """True iff this is a permutation of 0..n-1."""
        return len(self.order) == n and sorted(self.order) == list(range(n))


@dataclass(frozen=True)
class TripPlan:
    """Segment-by-segment account of one sequence.

    ``segments[i]`` is the distance covered while the vehicle at position
    ``i`` leads (the return-trip factor is folded in, so the segments sum
    to ``total``). ``stops[i]`` is the cumulative turnaround position.
    ``ledger[k]`` is the (lhs, rhs) pair of the fuel-balance constraint
    covering positions ``k..n-1``: fuel burned by that tail of the convoy,
    out and back, against the fuel it carries.
    """

    segments: tuple[Fraction, ...]
    stops: tuple[Fraction, ...]
    total: Fraction
    ledger: tuple[tuple[Fraction, Fraction], ...]


def _checked_order(instance: Instance, seq: Sequence) -> tuple[int, ...]:
    if not isinstance(seq, Sequence):
        raise MalformedSequenceError(f"expected a Sequence, got {type(seq).__name__}")
    if not seq.is_permutation(instance.n):
        raise MalformedSequenceError(
            f"sequence {seq.order} is not a permutation of 0..{instance.n - 1}"
        )
    return seq.order


def _suffix_rates(instance: Instance, order: tuple[int, ...]) -> list[Fraction]:
    """suffix_rates[i] = total burn rate of the convoy from position i on."""
    acc = Fraction(0)
    out = [Fraction(0)] * len(order)
    for i in range(len(order) - 1, -1, -1):
        acc += instance.vehicles[order[i]].rate
        out[i] = acc
    return out


def evaluate(instance: Instance, seq: Sequence) -> Fraction:
    """Total distance reached by the final vehicle of ``seq``, exactly.

    Pure formula evaluation; adjacency constraints are ignored here.
    """
    order = _checked_order(instance, seq)
    total = Fraction(0)
    acc = Fraction(0)
    for i in range(len(order) - 1, -1, -1):
        vehicle = instance.vehicles[order[i]]
        acc += vehicle.rate
        total += HALF * (vehicle.capacity / acc)
    return total


def segment_distances(instance: Instance, seq: Sequence) -> tuple[Fraction, ...]:
    """Per-position segment lengths; they sum to ``evaluate(instance, seq)``."""
    order = _checked_order(instance, seq)
    suffix = _suffix_rates(instance, order)
    return tuple(
        instance.vehicles[order[i]].capacity / (2 * suffix[i])
        for i in range(len(order))
    )


def trip_plan(instance: Instance, seq: Sequence) -> TripPlan:
    """Segments, turnaround stops, total distance and the fuel ledger.

    With these (optimal) segment lengths every ledger row holds with exact
    equality: each leg burns precisely the capacity its lead vehicle adds.
    """
    order = _checked_order(instance, seq)
    suffix = _suffix_rates(instance, order)
    segments = segment_distances(instance, seq)
    stops = []
    position = Fraction(0)
    for d in segments:
        position += d
        stops.append(position)
    total = evaluate(instance, seq)
    ledger = []
    lhs = Fraction(0)
    rhs = Fraction(0)
    for k in range(len(order) - 1, -1, -1):
        lhs += 2 * segments[k] * suffix[k]
        rhs += instance.vehicles[order[k]].capacity
        ledger.append((lhs, rhs))
    ledger.reverse()
    return TripPlan(segments, tuple(stops), total, tuple(ledger))


def check_feasibility(instance: Instance, seq: Sequence, distances) -> bool:
    """Do the given per-position distances satisfy every fuel-balance row?

    Accepts arbitrary (possibly suboptimal) nonnegative distances; returns
    whether, for every position ``k``, the fuel burned by the convoy tail
    from ``k`` on stays within the capacity that tail carries.
    """
    order = _checked_order(instance, seq)
    n = len(order)
    ds = []
    for value in distances:
        try:
            d = as_rational(value)
        except (TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad distance value {value!r}") from exc
        ds.append(d)
    if len(ds) != n:
        raise MalformedInputError(f"expected {n} distances, got {len(ds)}")
    if any(d < 0 for d in ds):
        raise MalformedInputError("distances must be nonnegative")
    suffix = _suffix_rates(instance, order)
    lhs = Fraction(0)
    rhs = Fraction(0)
    for k in range(n - 1, -1, -1):
        lhs += 2 * ds[k] * suffix[k]
        rhs += instance.vehicles[order[k]].capacity
        if lhs > rhs:
            return False
    return True


def respects_adjacency(instance: Instance, seq: Sequence) -> bool:
    """True iff every consecutive pair and the final vehicle are allowed."""
    order = _checked_order(instance, seq)
    for i in range(len(order) - 1):
        if not instance.allows(order[i], order[i + 1]):
            return False
    return instance.allows_last(order[-1])
