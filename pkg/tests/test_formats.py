"""Text format round-trips and parse errors with line context."""

import random
from fractions import Fraction

import pytest

from nvep import (
    Digraph,
    Instance,
    ParseError,
    Vehicle,
    format_digraph,
    format_instance,
    load_digraph,
    load_instance,
    parse_digraph,
    parse_instance,
)
from nvep.generate import random_digraph, random_instance

F = Fraction

BASIC_INSTANCE = """\
# three equal-rate vehicles
3
1 1/2
2 1/2
3 1/2
"""

CONSTRAINED_INSTANCE = """\
3
1 1/2
2 1/2
3 1/2
adjacency
1 2
2 3
terminals
1 3
"""


class TestInstanceParsing:
    def test_basic(self):
        instance = parse_instance(BASIC_INSTANCE)
        assert instance.n == 3
        assert instance.capacities == (F(1), F(2), F(3))
        assert instance.rates == (F(1, 2),) * 3
        assert not instance.constrained

    def test_constrained(self):
        instance = parse_instance(CONSTRAINED_INSTANCE)
        assert instance.allows(0, 1) and instance.allows(1, 2)
        assert not instance.allows(2, 1)
        assert instance.terminal_allowed == (True, False, True)

    def test_comments_and_blanks_ignored(self):
        text = "# header\n\n2\n# one\n1 1\n\n2/3 4\n"
        instance = parse_instance(text)
        assert instance.capacities == (F(1), F(2, 3))

    def test_empty_adjacency_block_forbids_everything(self):
        text = "2\n1 1\n1 1\nadjacency\n"
        instance = parse_instance(text)
        assert not instance.allows(0, 1)
        assert not instance.allows(1, 0)

    def test_terminals_without_adjacency(self):
        text = "2\n1 1\n1 1\nterminals\n2\n"
        instance = parse_instance(text)
        assert instance.adjacency is None
        assert instance.terminal_allowed == (False, True)

    def test_terminals_keyword_at_eof_allows_nobody(self):
        instance = parse_instance("1\n1 1\nterminals\n")
        assert instance.terminal_allowed == (False,)

    def test_zero_vehicles_rejected(self):
        with pytest.raises(ParseError):
            parse_instance("0\n")

    @pytest.mark.parametrize(
        "text, bad_line",
        [
            ("x\n1 1\n", 1),
            ("2\n1 1\n1\n", 3),
            ("1\n1 0\n", 2),
            ("1\n-1 1\n", 2),
            ("1\n1 1/0\n", 2),
            ("1\n1 1\nadjacency\n0 1\n", 4),
            ("1\n1 1\nterminals\n5\n", 4),
            ("1\n1 1\nweird\n", 3),
        ],
    )
    def test_errors_carry_line_numbers(self, text, bad_line):
        with pytest.raises(ParseError) as err:
            parse_instance(text, source="bad.txt")
        assert err.value.line == bad_line
        assert "bad.txt" in str(err.value)

    def test_truncated_vehicle_block(self):
        with pytest.raises(ParseError):
            parse_instance("3\n1 1\n")


class TestInstanceRoundTrip:
    def test_basic_round_trip(self):
        instance = parse_instance(CONSTRAINED_INSTANCE)
        assert parse_instance(format_instance(instance)) == instance

    def test_random_unconstrained(self):
        rng = random.Random(101)
        for trial in range(25):
            instance = random_instance(rng.randint(1, 9), rng.randrange(2**30))
            assert parse_instance(format_instance(instance)) == instance

    def test_random_constrained(self):
        rng = random.Random(103)
        for trial in range(25):
            n = rng.randint(1, 7)
            base = random_instance(n, rng.randrange(2**30))
            pairs = {
                (i, j)
                for i in range(n)
                for j in range(n)
                if i != j and rng.random() < 0.5
            }
            terminals = [i for i in range(n) if rng.random() < 0.5]
            instance = Instance.with_constraints(
                base.vehicles, allowed_pairs=pairs, allowed_last=terminals
            )
            assert parse_instance(format_instance(instance)) == instance

    def test_all_false_terminals_round_trip(self):
        instance = Instance.with_constraints(
            (Vehicle(1, 1), Vehicle(2, 1)), allowed_last=[]
        )
        assert parse_instance(format_instance(instance)) == instance

    def test_lowest_terms_in_output(self):
        instance = Instance.unconstrained([F(2, 4)], [F(6, 3)])
        assert format_instance(instance) == "1\n1/2 2\n"


class TestDigraphParsing:
    def test_basic(self):
        g = parse_digraph("3 2\n1 2\n2 3\n")
        assert g.vertex_count == 3
        assert g.edges == frozenset({(1, 2), (2, 3)})

    def test_duplicate_edges_collapse(self):
        g = parse_digraph("2 2\n1 2\n1 2\n")
        assert g.edge_count == 1

    def test_comments(self):
        g = parse_digraph("# graph\n2 1\n# edge\n1 2\n")
        assert g.edge_count == 1

    @pytest.mark.parametrize(
        "text, bad_line",
        [
            ("x 1\n1 2\n", 1),
            ("0 0\n", 1),
            ("2 -1\n", 1),
            ("2 1\n1 1\n", 2),
            ("2 1\n1 5\n", 2),
            ("2 1\nhello\n", 2),
            ("2 1\n1 2\n2 1\n", 3),
        ],
    )
    def test_errors_carry_line_numbers(self, text, bad_line):
        with pytest.raises(ParseError) as err:
            parse_digraph(text, source="g.txt")
        assert err.value.line == bad_line

    def test_missing_edges(self):
        with pytest.raises(ParseError):
            parse_digraph("3 2\n1 2\n")

    def test_round_trip(self):
        rng = random.Random(107)
        for trial in range(25):
            g = random_digraph(rng.randint(1, 9), rng.random(), rng.randrange(2**30))
            assert parse_digraph(format_digraph(g)) == g


class TestFileLoaders:
    def test_load_instance_and_digraph(self, tmp_path):
        ipath = tmp_path / "inst.txt"
        ipath.write_text(BASIC_INSTANCE, encoding="utf-8")
        assert load_instance(ipath).n == 3
        gpath = tmp_path / "g.txt"
        gpath.write_text("2 1\n1 2\n", encoding="utf-8")
        assert load_digraph(gpath) == Digraph(2, frozenset({(1, 2)}))

    def test_load_errors_name_the_file(self, tmp_path):
        path = tmp_path / "broken.txt"
        path.write_text("2\n1 1\noops\n", encoding="utf-8")
        with pytest.raises(ParseError) as err:
            load_instance(path)
        assert "broken.txt" in str(err.value)
