"""Command-line surface.

Subcommands: solve, reduce, hp, verify, gen, bench, probe. Vehicles and
vertices are 1-indexed in all user-facing text. Exact rationals are
printed first; decimal approximations are labelled and never consumed by
any other command.

Exit codes: 0 success / yes / accept; 1 error (parse failure, solver
refusal, bad usage); 2 infeasible / no / reject; 3 disagreement between
decision routes.
"""

from __future__ import annotations

import argparse
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import bench as bench_mod
from .core import Sequence, respects_adjacency, trip_plan
from .errors import DisagreementError, NvepError, ParseError
from .formats import format_digraph, format_instance, load_digraph, load_instance
from .generate import GRAPH_FAMILIES, graph_family, random_instance
from .reduction import SEMANTICS, decide_hamiltonian_path, reduce_graph, semantics_probe
from .solvers import (
    BITMASK_CAP,
    BRUTE_FORCE_CAP,
    greedy_heuristic,
    solve_branch_and_bound,
    solve_brute_force,
    solve_constrained_dp,
    solve_suffix_dp,
    verify_certificate,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2
EXIT_DISAGREEMENT = 3


class _UsageError(NvepError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse would sys.exit(2) on bad usage; 2 is reserved for negative
    # answers, so usage problems are routed to exit code 1 instead.
    def error(self, message):
        raise _UsageError(message)


def approx_decimal(value: Fraction, digits: int = 12) -> str:
    """Decimal rendering with the given number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def one_indexed(seq: Sequence) -> str:
    return " ".join(str(i + 1) for i in seq.order)


def _write_output(text: str, path) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def cmd_solve(args) -> int:
    if args.cross_check and args.algo != "auto":
        raise _UsageError("--cross-check applies to --algo auto")
    instance = load_instance(args.instance)
    algo = args.algo
    if algo == "auto":
        runner = solve_constrained_dp if instance.constrained else solve_suffix_dp
    elif algo == "brute":
        runner = lambda inst: solve_brute_force(inst, cap=args.brute_cap)
    elif algo == "dp":
        runner = lambda inst: solve_suffix_dp(inst, cap=args.dp_cap)
    elif algo == "bnb":
        runner = solve_branch_and_bound
    else:
        runner = greedy_heuristic
    result = runner(instance)
    if not result.feasible:
        print("infeasible")
        return EXIT_NEGATIVE
    print(f"sequence: {one_indexed(result.best_sequence)}")
    print(f"distance: {result.best_distance}")
    print(f"decimal: {approx_decimal(result.best_distance)} (approximate)")
    print(f"optimal: {'yes' if result.optimal else 'no'}")
    stats = " ".join(
        f"{k}={v:.6f}" if isinstance(v, float) else f"{k}={v}"
        for k, v in result.stats.as_dict().items()
    )
    print(f"stats: {stats}")
    if args.cross_check:
        if instance.n <= args.brute_cap:
            check = solve_brute_force(instance, cap=args.brute_cap)
            if check.best_distance != result.best_distance:
                print(
                    f"cross-check: MISMATCH brute={check.best_distance} "
                    f"vs {result.best_distance}",
                    file=sys.stderr,
                )
                return EXIT_ERROR
            print("cross-check: ok (brute force agrees)")
        else:
            print(f"cross-check: skipped (n={instance.n} above brute cap {args.brute_cap})")
    return EXIT_OK


def cmd_reduce(args) -> int:
    g = load_digraph(args.graph)
    instance = reduce_graph(g, args.semantics)
    _write_output(format_instance(instance), args.output)
    return EXIT_OK


def cmd_hp(args) -> int:
    g = load_digraph(args.graph)
    found, path = decide_hamiltonian_path(g, via=args.via)
    print("yes" if found else "no")
    if path is not None:
        print("path: " + " ".join(str(v) for v in path.vertices))
    if args.via == "both":
        print("agreement: ok")
    return EXIT_OK if found else EXIT_NEGATIVE


def cmd_verify(args) -> int:
    instance = load_instance(args.instance)
    tokens = args.sequence.split()
    try:
        indices = [int(t) for t in tokens]
    except ValueError:
        raise ParseError(f"bad sequence {args.sequence!r}; expected 1-indexed integers")
    try:
        threshold = Fraction(args.threshold)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad threshold {args.threshold!r}")
    seq = Sequence(tuple(i - 1 for i in indices))
    if not seq.is_permutation(instance.n):
        print("certificate: reject (not a permutation)")
        return EXIT_NEGATIVE
    plan = trip_plan(instance, seq)
    print(f"distance: {plan.total}")
    for k, (lhs, rhs) in enumerate(plan.ledger, start=1):
        status = "ok" if lhs <= rhs else "VIOLATED"
        print(f"constraint {k}: {lhs} <= {rhs} {status}")
    if not instance.constrained:
        print("adjacency: unconstrained")
        adjacency_ok = True
    else:
        adjacency_ok = respects_adjacency(instance, seq)
        print(f"adjacency: {'ok' if adjacency_ok else 'violated'}")
    accepted = verify_certificate(instance, seq, threshold)
    relation = ">=" if plan.total >= threshold else "<"
    detail = f"distance {plan.total} {relation} threshold {threshold}"
    if accepted:
        print(f"certificate: accept ({detail})")
        return EXIT_OK
    reason = detail if adjacency_ok else "adjacency violated"
    print(f"certificate: reject ({reason})")
    return EXIT_NEGATIVE


def cmd_gen(args) -> int:
    if args.kind == "instance":
        instance = random_instance(
            args.n,
            args.seed,
            max_numerator=args.max_numerator,
            max_denominator=args.max_denominator,
        )
        text = format_instance(instance)
    else:
        g = graph_family(args.family, args.n, density=args.density, seed=args.seed)
        text = format_digraph(g)
    _write_output(text, args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    if args.suite == "solvers":
        sizes = _parse_sizes(args.sizes) if args.sizes else bench_mod.SOLVER_SIZES
        rows = bench_mod.run_solver_suite(sizes, args.seed)
    else:
        sizes = _parse_sizes(args.sizes) if args.sizes else bench_mod.REDUCTION_SIZES
        rows = bench_mod.run_reduction_suite(sizes, args.seed)
    sys.stdout.write(bench_mod.format_rows(rows))
    return EXIT_OK


def cmd_probe(args) -> int:
    g = load_digraph(args.graph)
    report = semantics_probe(g, cap=args.cap)
    for line in report.to_lines():
        print(line)
    return EXIT_OK


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise _UsageError(f"bad --sizes {text!r}; expected integers")
    if not sizes or any(n < 1 for n in sizes):
        raise _UsageError(f"bad --sizes {text!r}; sizes must be >= 1")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nvep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance", help="instance file")
    p.add_argument("--algo", choices=("auto", "brute", "dp", "bnb", "greedy"), default="auto")
    p.add_argument("--cross-check", action="store_true", help="verify auto result against brute force")
    p.add_argument("--brute-cap", type=int, default=BRUTE_FORCE_CAP)
    p.add_argument("--dp-cap", type=int, default=BITMASK_CAP)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="turn a digraph into an instance file")
    p.add_argument("graph", help="graph file")
    p.add_argument("--semantics", choices=SEMANTICS, default="forbidden")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("hp", help="decide Hamiltonian path")
    p.add_argument("graph", help="graph file")
    p.add_argument("--via", choices=("nvep", "backtrack", "both"), default="both")
    p.set_defaults(func=cmd_hp)

    p = sub.add_parser("verify", help="check a sequence certificate")
    p.add_argument("instance", help="instance file")
    p.add_argument("--sequence", required=True, help="1-indexed order, e.g. '1 2 3'")
    p.add_argument("--threshold", required=True, help="rational threshold, e.g. '13/3'")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate an instance or graph file")
    p.add_argument("--kind", choices=("instance", "graph"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", choices=GRAPH_FAMILIES, default="random", help="graph family")
    p.add_argument("--density", type=float, default=0.5, help="edge probability for random graphs")
    p.add_argument("--max-numerator", type=int, default=10)
    p.add_argument("--max-denominator", type=int, default=6)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="run a benchmark suite")
    p.add_argument("--suite", choices=("solvers", "reduction"), default="solvers")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default=None, help="comma-separated sizes")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("probe", help="probe zero-distance semantics on a graph")
    p.add_argument("graph", help="graph file")
    p.add_argument("--cap", type=int, default=BRUTE_FORCE_CAP)
    p.set_defaults(func=cmd_probe)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except DisagreementError as exc:
        for key, value in exc.report.items():
            print(f"{key}: {value}")
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (NvepError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
