"""Graph reduction, decision pipeline, oracle cross-validation, probe."""

import itertools
import random
from fractions import Fraction

import pytest
from conftest import exhaustive_hamiltonian, naive_distance

from nvep import (
    CapacityError,
    DecodeRejection,
    Digraph,
    Path,
    Sequence,
    decide_hamiltonian_path,
    decode_sequence,
    evaluate,
    hp_oracle_backtracking,
    reduce_graph,
    semantics_probe,
    solve_constrained_dp,
    verify_path,
    zero_adjusted_distance,
)
from nvep.generate import (
    cycle_digraph,
    edgeless_digraph,
    path_digraph,
    random_digraph,
    two_cliques_digraph,
)

F = Fraction


def graph(n, edges):
    return Digraph(n, frozenset(edges))


class TestDigraph:
    def test_validation(self):
        with pytest.raises(ValueError):
            Digraph(0, frozenset())
        with pytest.raises(ValueError):
            graph(2, {(1, 1)})
        with pytest.raises(ValueError):
            graph(2, {(1, 3)})

    def test_successors_sorted(self):
        g = graph(3, {(1, 3), (1, 2)})
        assert g.successors(1) == (2, 3)
        assert g.successors(2) == ()


class TestReduceGraph:
    def test_path_graph(self):
        instance = reduce_graph(graph(3, {(1, 2), (2, 3)}))
        assert instance.capacities == (F(1), F(2), F(3))
        assert instance.rates == (F(1, 2), F(1, 2), F(1, 2))
        assert instance.allows(0, 1) and instance.allows(1, 2)
        assert not instance.allows(1, 0) and not instance.allows(0, 2)
        assert instance.terminal_allowed == (True, True, True)

    def test_single_vertex(self):
        instance = reduce_graph(graph(1, set()))
        assert instance.n == 1
        assert instance.capacities == (F(1),)
        assert instance.allows_last(0)

    def test_edgeless_is_infeasible_for_the_solver(self):
        instance = reduce_graph(graph(3, set()))
        assert not solve_constrained_dp(instance).feasible

    def test_zero_semantics_is_unconstrained(self):
        instance = reduce_graph(graph(3, {(1, 2)}), "zero")
        assert not instance.constrained

    def test_unknown_semantics(self):
        with pytest.raises(ValueError):
            reduce_graph(graph(1, set()), "nonsense")

    def test_size_is_polynomial_in_graph(self):
        rng = random.Random(71)
        for trial in range(20):
            n = rng.randint(1, 9)
            g = random_digraph(n, rng.random(), rng.randrange(2**30))
            instance = reduce_graph(g)
            assert instance.n == g.vertex_count
            allowed = sum(
                1
                for i in range(n)
                for j in range(n)
                if i != j and instance.allows(i, j)
            )
            assert allowed == g.edge_count


class TestFloorProperty:
    def test_distance_formula_and_floor_up_to_6(self):
        # every full order of the reduced fleet reaches at least n, the
        # descending order exactly n, and nothing else ties it
        for n in range(1, 7):
            instance = reduce_graph(graph(n, set()), "zero")
            descending = tuple(range(n - 1, -1, -1))
            minimum_hits = []
            for perm in itertools.permutations(range(n)):
                value = evaluate(instance, Sequence(perm))
                expected = sum(
                    (F(perm[i] + 1, n - i) for i in range(n)), F(0)
                )
                assert value == expected
                assert value >= n
                if value == n:
                    minimum_hits.append(perm)
            assert minimum_hits == [descending]


class TestDecodeAndVerify:
    def test_decode_accepts_edge_respecting(self):
        g = graph(3, {(1, 2), (2, 3)})
        decoded = decode_sequence(g, Sequence((0, 1, 2)))
        assert decoded == Path((1, 2, 3))

    def test_decode_rejects_naming_the_pair(self):
        g = graph(3, {(1, 2), (2, 3)})
        rejection = decode_sequence(g, Sequence((1, 0, 2)))
        assert isinstance(rejection, DecodeRejection)
        assert rejection.pair == (2, 1)
        assert rejection.position == 1

    def test_decode_single_vertex(self):
        assert decode_sequence(graph(1, set()), Sequence((0,))) == Path((1,))

    def test_decode_non_permutation_is_a_rejection(self):
        rejection = decode_sequence(graph(2, {(1, 2)}), Sequence((0, 0)))
        assert isinstance(rejection, DecodeRejection)

    def test_verify_path(self):
        g = graph(3, {(1, 2), (2, 3)})
        assert verify_path(g, Path((1, 2, 3)))
        assert not verify_path(g, Path((1, 2)))  # not spanning
        assert not verify_path(g, Path((1, 3, 2)))  # (1, 3) is not an edge
        assert not verify_path(g, Path((1, 2, 2)))


class TestBacktrackingOracle:
    def test_complete_digraph(self):
        n = 4
        g = graph(n, {(u, v) for u in range(1, 5) for v in range(1, 5) if u != v})
        found, path = hp_oracle_backtracking(g)
        assert found and verify_path(g, path)

    def test_path_graph(self):
        found, path = hp_oracle_backtracking(graph(3, {(1, 2), (2, 3)}))
        assert found
        assert path == Path((1, 2, 3))

    def test_disconnected(self):
        assert hp_oracle_backtracking(graph(2, set())) == (False, None)

    def test_single_vertex(self):
        assert hp_oracle_backtracking(graph(1, set())) == (True, Path((1,)))

    def test_matches_exhaustive_enumeration(self):
        rng = random.Random(73)
        for trial in range(60):
            n = rng.randint(1, 6)
            g = random_digraph(n, 0.1 + 0.8 * rng.random(), rng.randrange(2**30))
            expected_found, _ = exhaustive_hamiltonian(g)
            found, path = hp_oracle_backtracking(g)
            assert found == expected_found
            if found:
                assert verify_path(g, path)


class TestDecisionPipeline:
    def test_yes_instance(self):
        found, path = decide_hamiltonian_path(graph(3, {(1, 2), (2, 3)}), via="nvep")
        assert found
        assert path == Path((1, 2, 3))

    def test_no_instance(self):
        found, path = decide_hamiltonian_path(graph(3, {(1, 2), (1, 3)}), via="nvep")
        assert not found and path is None

    def test_single_vertex(self):
        assert decide_hamiltonian_path(graph(1, set()), via="nvep")[0]

    def test_both_agrees_on_families(self):
        # raises DisagreementError if the two routes ever differ
        for n in range(1, 8):
            for g in (path_digraph(n), cycle_digraph(n), edgeless_digraph(n), two_cliques_digraph(n)):
                found, path = decide_hamiltonian_path(g, via="both")
                if path is not None:
                    assert verify_path(g, path)
        assert decide_hamiltonian_path(path_digraph(5), via="both")[0]
        assert decide_hamiltonian_path(cycle_digraph(6), via="both")[0]
        assert not decide_hamiltonian_path(edgeless_digraph(3), via="both")[0]
        assert not decide_hamiltonian_path(two_cliques_digraph(4), via="both")[0]

    def test_both_agrees_on_random_graphs(self):
        rng = random.Random(79)
        for trial in range(50):
            n = rng.randint(1, 7)
            g = random_digraph(n, 0.1 + 0.8 * rng.random(), rng.randrange(2**30))
            nvep_found, nvep_path = decide_hamiltonian_path(g, via="nvep")
            oracle_found, _ = hp_oracle_backtracking(g)
            assert nvep_found == oracle_found
            if nvep_found:
                assert verify_path(g, nvep_path)
            # the combined route never raises for forbidden semantics
            decide_hamiltonian_path(g, via="both")

    def test_round_trip_solver_to_path(self):
        rng = random.Random(83)
        for trial in range(30):
            n = rng.randint(1, 7)
            g = random_digraph(n, 0.5, rng.randrange(2**30))
            result = solve_constrained_dp(reduce_graph(g))
            if result.feasible:
                decoded = decode_sequence(g, result.best_sequence)
                assert isinstance(decoded, Path)
                assert verify_path(g, decoded)

    def test_unknown_via(self):
        with pytest.raises(ValueError):
            decide_hamiltonian_path(graph(1, set()), via="telepathy")


class TestZeroSemantics:
    def test_zero_adjusted_drops_non_edges_only(self):
        g = graph(3, {(1, 2)})
        # order 1,2,3: edge term kept, missing (2,3) dropped, last kept
        assert zero_adjusted_distance(g, Sequence((0, 1, 2))) == F(1, 3) + F(3)
        # fully edge-respecting order keeps everything
        g2 = graph(3, {(1, 2), (2, 3)})
        assert zero_adjusted_distance(g2, Sequence((0, 1, 2))) == F(13, 3)

    def test_probe_single_vertex(self):
        report = semantics_probe(graph(1, set()))
        assert report.max_distance == F(1)
        assert report.meets_threshold and report.hamiltonian and report.agrees
        assert report.disagreement_witness is None

    def test_probe_agreement_on_path_graph(self):
        report = semantics_probe(graph(3, {(1, 2), (2, 3)}))
        assert report.max_distance == F(13, 3)
        assert report.agrees

    def test_probe_finds_the_known_disagreement(self):
        # a single edge cannot span three vertices, yet zeroing lets the
        # order 1,2,3 reach 1/3 + 0 + 3 = 10/3 >= 3
        report = semantics_probe(graph(3, {(1, 2)}))
        assert report.max_distance == F(10, 3)
        assert report.meets_threshold
        assert not report.hamiltonian
        assert not report.agrees
        assert report.disagreement_witness == (1, 2, 3)

    def test_probe_max_matches_exhaustive_recomputation(self):
        rng = random.Random(89)
        for trial in range(15):
            n = rng.randint(1, 5)
            g = random_digraph(n, rng.random(), rng.randrange(2**30))
            report = semantics_probe(g)
            best = max(
                zero_adjusted_distance(g, Sequence(perm))
                for perm in itertools.permutations(range(n))
            )
            assert report.max_distance == best
            assert report.threshold == F(n)

    def test_probe_cap(self):
        with pytest.raises(CapacityError):
            semantics_probe(path_digraph(11))

    def test_report_lines_are_key_value(self):
        report = semantics_probe(graph(3, {(1, 2)}))
        lines = report.to_lines()
        assert all(": " in line for line in lines)
        assert lines[0] == "vertices: 3"
        assert "witness: 1 2 3" in lines
