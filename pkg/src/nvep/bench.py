"""Benchmark suites: solver growth curves and reduction cross-validation.

Rows are plain dicts so the CLI can render them as a table and tests can
assert on the non-timing columns, which are deterministic for a fixed
seed. The solver suite makes the complexity contrast visible: the subset
DP fills exactly 2^n subsets while exhaustive enumeration walks n!
permutations and is refused outright above its cap.
"""

from __future__ import annotations

import time

from .errors import CapacityError, DisagreementError
from .generate import (
    cycle_digraph,
    edgeless_digraph,
    path_digraph,
    random_digraph,
    random_instance,
)
from .reduction import decide_hamiltonian_path, verify_path
from .solvers import (
    BRUTE_FORCE_CAP,
    solve_branch_and_bound,
    solve_brute_force,
    solve_suffix_dp,
)

SOLVER_SIZES = (2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 20)
BNB_SIZE_LIMIT = 10
REDUCTION_SIZES = (3, 4, 5, 6, 7, 8, 9)
REDUCTION_DENSITIES = (0.2, 0.5, 0.8)

# Keys whose values vary run to run; everything else is deterministic.
TIMING_KEYS = ("brute_time_s", "dp_time_s", "bnb_time_s", "time_s")


def run_solver_suite(
    sizes=SOLVER_SIZES,
    seed: int = 0,
    *,
    brute_cap: int = BRUTE_FORCE_CAP,
    bnb_limit: int = BNB_SIZE_LIMIT,
) -> list[dict]:
    rows = []
    for n in sizes:
        instance = random_instance(n, seed * 1009 + n)
        row = {
            "n": n,
            "brute_time_s": None,
            "brute_perms": None,
            "brute_refused": False,
            "dp_time_s": None,
            "dp_subsets": None,
            "bnb_time_s": None,
            "bnb_nodes": None,
            "agree": None,
        }
        distances = []
        try:
            result = solve_brute_force(instance, cap=brute_cap)
            row["brute_time_s"] = result.stats.wall_time_s
            row["brute_perms"] = result.stats.permutations_enumerated
            distances.append(result.best_distance)
        except CapacityError:
            row["brute_refused"] = True
        result = solve_suffix_dp(instance)
        row["dp_time_s"] = result.stats.wall_time_s
        row["dp_subsets"] = result.stats.subsets_filled
        distances.append(result.best_distance)
        if n <= bnb_limit:
            result = solve_branch_and_bound(instance)
            row["bnb_time_s"] = result.stats.wall_time_s
            row["bnb_nodes"] = result.stats.nodes_expanded
            distances.append(result.best_distance)
        if len(distances) > 1:
            row["agree"] = all(d == distances[0] for d in distances)
        rows.append(row)
    return rows


def _reduction_cases(n: int, seed: int):
    for i, density in enumerate(REDUCTION_DENSITIES):
        yield random_digraph(n, density, seed * 7919 + n * 31 + i)
    yield path_digraph(n)
    yield cycle_digraph(n)
    yield edgeless_digraph(n)


def run_reduction_suite(sizes=REDUCTION_SIZES, seed: int = 0) -> list[dict]:
    rows = []
    for n in sizes:
        yes = no = disagreements = bad_witnesses = 0
        started = time.perf_counter()
        for g in _reduction_cases(n, seed):
            try:
                found, path = decide_hamiltonian_path(g, via="both")
            except DisagreementError:
                disagreements += 1
                continue
            if found:
                yes += 1
                if not verify_path(g, path):
                    bad_witnesses += 1
            else:
                no += 1
        rows.append(
            {
                "n": n,
                "cases": yes + no + disagreements,
                "yes": yes,
                "no": no,
                "disagreements": disagreements,
                "bad_witnesses": bad_witnesses,
                "time_s": time.perf_counter() - started,
            }
        )
    return rows


def format_rows(rows: list[dict]) -> str:
    """Render rows as an aligned table; None prints as '-', floats rounded."""
    if not rows:
        return ""
    columns = list(rows[0].keys())

    def cell(row, key):
        value = row.get(key)
        if value is None:
            return "refused" if key == "brute_perms" and row.get("brute_refused") else "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, float):
            return f"{value:.3f}"
        return str(value)

    table = [columns] + [[cell(row, key) for key in columns] for row in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(columns))]
    lines = ["  ".join(text.ljust(widths[i]) for i, text in enumerate(line)).rstrip() for line in table]
    return "\n".join(lines) + "\n"
