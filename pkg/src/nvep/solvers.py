"""Exact and heuristic search over refueling sequences.

Four exact routes (exhaustive enumeration, a subset DP for unconstrained
instances, a pair-state DP for adjacency-constrained instances, and
branch-and-bound) plus a ratio-sort heuristic and the threshold decision
wrapper. All of them agree exactly, and all prefer the lexicographically
smallest order among optima so results are comparable across solvers.

The hot loops avoid ``Fraction`` overhead by clearing denominators once up
front: with capacities scaled to a common denominator and rates scaled to
integers, the value contributed by vehicle ``k`` while the set ``S`` is
still travelling is ``num[k] / (den_factor * rate_sum(S))`` with integer
numerator and denominator. Values are carried as unnormalised integer
pairs and compared by cross-multiplication, which is exact. No floats
anywhere except wall-clock stats.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .core import Instance, Sequence, as_rational, evaluate
from .errors import CapacityError, WrongSolverError

# Default size caps. Exhaustive enumeration grows as n!; the subset DP
# keeps one value per subset (2^n) and the pair-state DP one value per
# (subset, first vehicle) pair (n * 2^n), which is why its default is
# tighter. All caps are arguments, not hard limits.
BRUTE_FORCE_CAP = 10
BITMASK_CAP = 24
CONSTRAINED_BITMASK_CAP = 20


@dataclass
class SearchStats:
    """Plain counters describing one solver run."""

    nodes_expanded: int = 0
    subsets_filled: int = 0
    permutations_enumerated: int = 0
    prunes: int = 0
    wall_time_s: float = 0.0

    def as_dict(self) -> dict:
        return {
            "nodes_expanded": self.nodes_expanded,
            "subsets_filled": self.subsets_filled,
            "permutations_enumerated": self.permutations_enumerated,
            "prunes": self.prunes,
            "wall_time_s": self.wall_time_s,
        }


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a solver run.

    ``best_sequence is None`` is the explicit infeasible outcome
    (constraints eliminated every full sequence); it is an answer, not an
    error. ``optimal`` is True for exact solvers, including an exact proof
    of infeasibility, and False for heuristics.
    """

    best_sequence: Sequence | None
    best_distance: Fraction | None
    optimal: bool
    stats: SearchStats

    @property
    def feasible(self) -> bool:
        return self.best_sequence is not None


@dataclass(frozen=True)
class _Scaled:
    """Integer form of an instance: term_k(S) = num[k] / (den_factor * B(S))
    where B(S) sums ``rate`` over the still-travelling set S."""

    num: tuple[int, ...]
    rate: tuple[int, ...]
    den_factor: int


def _scale(instance: Instance) -> _Scaled:
    caps = instance.capacities
    rates = instance.rates
    cap_denom = lcm(*(c.denominator for c in caps))
    rate_denom = lcm(*(r.denominator for r in rates))
    num = tuple(int(c * cap_denom) * rate_denom for c in caps)
    rate = tuple(int(r * rate_denom) for r in rates)
    return _Scaled(num, rate, 2 * cap_denom)


def _infeasible(stats: SearchStats) -> SolveResult:
    return SolveResult(None, None, True, stats)


def solve_brute_force(instance: Instance, *, cap: int = BRUTE_FORCE_CAP) -> SolveResult:
    """Enumerate every permutation and keep the farthest-reaching one.

    Adjacency-violating prefixes are skipped as soon as they appear; ties
    go to the lexicographically smallest order. Refuses ``n`` above
    ``cap`` (use a DP solver instead).
    """
    n = instance.n
    if n > cap:
        raise CapacityError(f"brute force refuses n={n} above cap {cap}; use a DP solver")
    stats = SearchStats()
    started = time.perf_counter()
    scaled = _scale(instance)
    num, rate, den_factor = scaled.num, scaled.rate, scaled.den_factor
    adjacency = instance.adjacency
    terminal = instance.terminal_allowed
    best: list = [None, None, None]  # numerator, denominator, order
    path: list[int] = []

    def extend(remaining: int, rate_left: int, acc_n: int, acc_d: int, prev: int) -> None:
        if remaining == 0:
            stats.permutations_enumerated += 1
            if terminal is not None and not terminal[prev]:
                return
            if best[0] is None or acc_n * best[1] > best[0] * acc_d:
                best[0], best[1], best[2] = acc_n, acc_d, tuple(path)
            return
        stats.nodes_expanded += 1
        den = den_factor * rate_left
        m = remaining
        while m:
            low = m & -m
            m ^= low
            k = low.bit_length() - 1
            if adjacency is not None and prev >= 0 and not adjacency[prev][k]:
                continue
            path.append(k)
            extend(
                remaining ^ low,
                rate_left - rate[k],
                acc_n * den + num[k] * acc_d,
                acc_d * den,
                k,
            )
            path.pop()

    extend((1 << n) - 1, sum(rate), 0, 1, -1)
    stats.wall_time_s = time.perf_counter() - started
    if best[0] is None:
        return _infeasible(stats)
    return SolveResult(Sequence(best[2]), Fraction(best[0], best[1]), True, stats)


def solve_suffix_dp(instance: Instance, *, cap: int = BITMASK_CAP) -> SolveResult:
    """Exact optimum for unconstrained instances via a subset DP.

    Each position's contribution depends only on the *set* of vehicles
    still travelling, so the best value over arrangements of a set S is
    ``f(S) = max_k term_k(S) + f(S - k)`` with ``f(empty) = 0``. Fills all
    2^n subsets; O(n * 2^n) time, one value per subset.
    """
    if instance.constrained:
        raise WrongSolverError(
            "suffix DP handles unconstrained instances only; "
            "use solve_constrained_dp"
        )
    n = instance.n
    if n > cap:
        raise CapacityError(f"subset DP refuses n={n} above cap {cap}")
    stats = SearchStats()
    started = time.perf_counter()
    scaled = _scale(instance)
    num, rate, den_factor = scaled.num, scaled.rate, scaled.den_factor
    full = (1 << n) - 1
    rate_sum = [0] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rate_sum[s] = rate_sum[s ^ low] + rate[low.bit_length() - 1]
    # f(s) kept as a normalised fraction fn[s]/fd[s]; candidates compared
    # by cross-multiplication so intermediate pairs need no gcd.
    fn = [0] * (full + 1)
    fd = [1] * (full + 1)
    for s in range(1, full + 1):
        den = den_factor * rate_sum[s]
        m = s
        low = m & -m
        m ^= low
        j = s ^ low
        pd = fd[j]
        best_n = fn[j] * den + num[low.bit_length() - 1] * pd
        best_d = pd * den
        while m:
            low = m & -m
            m ^= low
            j = s ^ low
            pd = fd[j]
            cand_n = fn[j] * den + num[low.bit_length() - 1] * pd
            cand_d = pd * den
            if cand_n * best_d > best_n * cand_d:
                best_n, best_d = cand_n, cand_d
        g = gcd(best_n, best_d)
        fn[s] = best_n // g
        fd[s] = best_d // g
    # Reconstruct the lexicographically smallest optimal order: at each
    # set, the smallest vehicle whose term plus the sub-optimum attains f.
    order = []
    s = full
    while s:
        den = den_factor * rate_sum[s]
        m = s
        chosen = -1
        while m:
            low = m & -m
            m ^= low
            k = low.bit_length() - 1
            j = s ^ low
            if fn[s] * (fd[j] * den) == (fn[j] * den + num[k] * fd[j]) * fd[s]:
                chosen = k
                break
        assert chosen >= 0
        order.append(chosen)
        s ^= 1 << chosen
    stats.subsets_filled = full + 1
    stats.wall_time_s = time.perf_counter() - started
    return SolveResult(Sequence(tuple(order)), Fraction(fn[full], fd[full]), True, stats)


def solve_constrained_dp(instance: Instance, *, cap: int = CONSTRAINED_BITMASK_CAP) -> SolveResult:
    """Exact optimum under adjacency/terminal constraints.

    Unconstrained subset state is not enough once consecutive pairs are
    restricted, so the state is (set S, first vehicle of the tail):
    ``g(S, k)`` is the best arrangement of S that starts with k and ends
    the trip. O(n^2 * 2^n) time, n * 2^n values; only states with a
    feasible tail are stored. Works on unconstrained instances too, where
    it reduces to the subset DP.
    """
    n = instance.n
    if n > cap:
        raise CapacityError(f"pair-state DP refuses n={n} above cap {cap}")
    stats = SearchStats()
    started = time.perf_counter()
    scaled = _scale(instance)
    num, rate, den_factor = scaled.num, scaled.rate, scaled.den_factor
    adjacency = instance.adjacency
    full = (1 << n) - 1
    rate_sum = [0] * (full + 1)
    for s in range(1, full + 1):
        low = s & -s
        rate_sum[s] = rate_sum[s ^ low] + rate[low.bit_length() - 1]
    # g[s] maps first vehicle k -> normalised (num, den); absent k means
    # no feasible tail occupies s starting with k.
    g: list = [None] * (full + 1)
    for s in range(1, full + 1):
        den = den_factor * rate_sum[s]
        entry = {}
        m = s
        while m:
            low = m & -m
            m ^= low
            k = low.bit_length() - 1
            rest = s ^ low
            if rest == 0:
                if instance.allows_last(k):
                    d = gcd(num[k], den)
                    entry[k] = (num[k] // d, den // d)
                continue
            tail = g[rest]
            if not tail:
                continue
            best_n = best_d = None
            for k2, (qn, qd) in tail.items():
                if adjacency is not None and not adjacency[k][k2]:
                    continue
                if best_n is None or qn * best_d > best_n * qd:
                    best_n, best_d = qn, qd
            if best_n is None:
                continue
            stats.nodes_expanded += 1
            value_n = num[k] * best_d + best_n * den
            value_d = den * best_d
            d = gcd(value_n, value_d)
            entry[k] = (value_n // d, value_d // d)
        if entry:
            g[s] = entry
            stats.subsets_filled += 1
    stats.wall_time_s = time.perf_counter() - started
    table = g[full]
    if not table:
        return _infeasible(stats)
    # Smallest starting vehicle among value maximisers, then greedily the
    # smallest admissible continuation attaining each remaining value:
    # yields the lexicographically smallest optimal order.
    first = None
    best_n = best_d = None
    for k in sorted(table):
        qn, qd = table[k]
        if best_n is None or qn * best_d > best_n * qd:
            best_n, best_d = qn, qd
            first = k
    order = [first]
    s = full
    k = first
    while s ^ (1 << k):
        vn, vd = g[s][k]
        den = den_factor * rate_sum[s]
        target_n = vn * den - num[k] * vd
        target_d = vd * den
        rest = s ^ (1 << k)
        nxt = None
        for k2 in sorted(g[rest]):
            if adjacency is not None and not adjacency[k][k2]:
                continue
            qn, qd = g[rest][k2]
            if qn * target_d == target_n * qd:
                nxt = k2
                break
        assert nxt is not None
        order.append(nxt)
        s = rest
        k = nxt
    return SolveResult(Sequence(tuple(order)), Fraction(best_n, best_d), True, stats)


def solve_branch_and_bound(instance: Instance) -> SolveResult:
    """Exact optimum via depth-first prefix extension with pruning.

    A prefix is bounded by its exact value plus an upper bound on what the
    remaining set R can add: sort the remaining capacities descending and
    the remaining rates ascending, and pair the largest capacity with the
    smallest tail rate-sum. No tail arrangement of R beats that pairing,
    so a branch whose bound does not exceed the incumbent is discarded.
    Children are explored in ascending index order and the incumbent only
    replaced on strict improvement, which preserves the lexicographic
    tie-break.
    """
    n = instance.n
    stats = SearchStats()
    started = time.perf_counter()
    scaled = _scale(instance)
    num, rate, den_factor = scaled.num, scaled.rate, scaled.den_factor
    adjacency = instance.adjacency
    terminal = instance.terminal_allowed
    best: list = [None, None, None]
    path: list[int] = []
    bound_cache: dict = {}

    def tail_bound(remaining: int) -> tuple[int, int]:
        cached = bound_cache.get(remaining)
        if cached is not None:
            return cached
        members = []
        m = remaining
        while m:
            low = m & -m
            m ^= low
            members.append(low.bit_length() - 1)
        caps = sorted((num[k] for k in members), reverse=True)
        rate_prefix = 0
        bn, bd = 0, 1
        for capacity, r in zip(caps, sorted(rate[k] for k in members)):
            rate_prefix += r
            den = den_factor * rate_prefix
            bn = bn * den + capacity * bd
            bd = bd * den
        d = gcd(bn, bd)
        result = (bn // d, bd // d)
        bound_cache[remaining] = result
        return result

    def extend(remaining: int, rate_left: int, acc_n: int, acc_d: int, prev: int) -> None:
        if remaining == 0:
            stats.permutations_enumerated += 1
            if terminal is not None and not terminal[prev]:
                return
            if best[0] is None or acc_n * best[1] > best[0] * acc_d:
                best[0], best[1], best[2] = acc_n, acc_d, tuple(path)
            return
        stats.nodes_expanded += 1
        if best[0] is not None:
            tn, td = tail_bound(remaining)
            bound_n = acc_n * td + tn * acc_d
            bound_d = acc_d * td
            if bound_n * best[1] <= best[0] * bound_d:
                stats.prunes += 1
                return
        den = den_factor * rate_left
        m = remaining
        while m:
            low = m & -m
            m ^= low
            k = low.bit_length() - 1
            if adjacency is not None and prev >= 0 and not adjacency[prev][k]:
                continue
            path.append(k)
            extend(
                remaining ^ low,
                rate_left - rate[k],
                acc_n * den + num[k] * acc_d,
                acc_d * den,
                k,
            )
            path.pop()

    extend((1 << n) - 1, sum(rate), 0, 1, -1)
    stats.wall_time_s = time.perf_counter() - started
    if best[0] is None:
        return _infeasible(stats)
    return SolveResult(Sequence(best[2]), Fraction(best[0], best[1]), True, stats)


def greedy_heuristic(instance: Instance) -> SolveResult:
    """Order vehicles by ascending capacity/rate ratio, ties by index.

    A baseline with no optimality claim in general; for a fleet with equal
    rates it happens to coincide with the optimum. Constraint-blind, so it
    refuses constrained instances rather than return an order that might
    violate them.
    """
    if instance.constrained:
        raise WrongSolverError(
            "greedy ignores adjacency constraints; solve constrained "
            "instances exactly"
        )
    started = time.perf_counter()
    caps = instance.capacities
    rates = instance.rates
    order = sorted(range(instance.n), key=lambda k: (caps[k] / rates[k], k))
    seq = Sequence(tuple(order))
    stats = SearchStats(wall_time_s=time.perf_counter() - started)
    return SolveResult(seq, evaluate(instance, seq), False, stats)


def decide_nvep(instance: Instance, threshold) -> tuple[bool, Sequence | None]:
    """Is some admissible sequence's distance at least ``threshold``?

    Returns ``(True, witness)`` with an exact witness, or ``(False, None)``.
    Uses the pair-state DP when constraints are present, the subset DP
    otherwise; their capacity refusals propagate.
    """
    t = as_rational(threshold)
    if instance.constrained:
        result = solve_constrained_dp(instance)
    else:
        result = solve_suffix_dp(instance)
    if not result.feasible or result.best_distance < t:
        return False, None
    return True, result.best_sequence


def verify_certificate(instance: Instance, seq, threshold) -> bool:
    """Polynomial-time certificate check.

    Accepts iff ``seq`` is a permutation, respects any adjacency and
    last-position constraints, and reaches at least ``threshold``.
    Malformed certificates are rejected, never raised on.
    """
    try:
        t = as_rational(threshold)
    except (TypeError, ValueError):
        return False
    if not isinstance(seq, Sequence) or not seq.is_permutation(instance.n):
        return False
    order = seq.order
    for i in range(len(order) - 1):
        if not instance.allows(order[i], order[i + 1]):
            return False
    if not instance.allows_last(order[-1]):
        return False
    return evaluate(instance, seq) >= t
