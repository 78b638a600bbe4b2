"""Line-oriented text formats for instances and digraphs.

Instance files::

    # comment lines start with '#'
    3             <- vehicle count n
    1 1/2         <- n lines: capacity rate, each "p" or "p/q"
    2 1/2
    3 1/2
    adjacency     <- optional: allowed consecutive pairs, 1-indexed
    1 2
    2 3
    terminals     <- optional: vehicles allowed in the last position
    1 2 3

Absent blocks mean "unconstrained". An ``adjacency`` keyword with no pair
lines means no pair is allowed; a ``terminals`` keyword at end of file
means no vehicle may finish.

Graph files::

    3 2           <- vertex count, edge count
    1 2           <- directed edges, 1-indexed
    2 3

Duplicate edges collapse (set semantics); self-loops are rejected.
Writers emit canonical lowest-terms rationals and sorted blocks, so
parse(format(x)) == x.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Instance, Vehicle
from .errors import ParseError
from .reduction import Digraph


def parse_rational(token: str, *, source=None, line=None) -> Fraction:
    """Parse "p" or "p/q" into a Fraction."""
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {token!r}", source, line) from exc


def _meaningful_lines(text: str):
    """(line number, content) for lines that are neither blank nor comments."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        yield lineno, stripped


class _Cursor:
    def __init__(self, text: str, source):
        self.lines = list(_meaningful_lines(text))
        self.source = source
        self.pos = 0

    def peek(self):
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def take(self, what: str):
        item = self.peek()
        if item is None:
            last = self.lines[-1][0] if self.lines else None
            raise ParseError(f"unexpected end of input, expected {what}", self.source, last)
        self.pos += 1
        return item

    def error(self, message: str, lineno=None):
        return ParseError(message, self.source, lineno)


def _parse_int(token: str, source, lineno, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"bad {what} {token!r}", source, lineno) from None


def parse_instance(text: str, source="<string>") -> Instance:
    """Parse instance text; errors carry the offending line number."""
    cur = _Cursor(text, source)
    lineno, head = cur.take("vehicle count")
    n = _parse_int(head, source, lineno, "vehicle count")
    if n < 1:
        raise cur.error(f"vehicle count must be at least 1, got {n}", lineno)
    vehicles = []
    for _ in range(n):
        lineno, line = cur.take("a 'capacity rate' line")
        tokens = line.split()
        if len(tokens) != 2:
            raise cur.error(f"expected 'capacity rate', got {line!r}", lineno)
        capacity = parse_rational(tokens[0], source=source, line=lineno)
        rate = parse_rational(tokens[1], source=source, line=lineno)
        if capacity <= 0 or rate <= 0:
            raise cur.error("capacity and rate must be positive", lineno)
        vehicles.append(Vehicle(capacity, rate))

    allowed_pairs = None
    allowed_last = None
    item = cur.peek()
    if item is not None and item[1] == "adjacency":
        cur.take("adjacency")
        allowed_pairs = set()
        while True:
            item = cur.peek()
            if item is None or item[1] == "terminals":
                break
            lineno, line = cur.take("an allowed pair")
            tokens = line.split()
            if len(tokens) != 2:
                raise cur.error(f"expected 'i j', got {line!r}", lineno)
            i = _parse_int(tokens[0], source, lineno, "vehicle index")
            j = _parse_int(tokens[1], source, lineno, "vehicle index")
            if not (1 <= i <= n and 1 <= j <= n):
                raise cur.error(f"pair ({i}, {j}) out of range 1..{n}", lineno)
            allowed_pairs.add((i - 1, j - 1))
    item = cur.peek()
    if item is not None and item[1] == "terminals":
        cur.take("terminals")
        item = cur.peek()
        if item is None:
            allowed_last = set()  # keyword at EOF: nothing may finish
        else:
            lineno, line = cur.take("terminal indices")
            allowed_last = set()
            for token in line.split():
                i = _parse_int(token, source, lineno, "vehicle index")
                if not (1 <= i <= n):
                    raise cur.error(f"terminal index {i} out of range 1..{n}", lineno)
                allowed_last.add(i - 1)
    item = cur.peek()
    if item is not None:
        raise cur.error(f"unexpected content {item[1]!r}", item[0])
    return Instance.with_constraints(
        vehicles, allowed_pairs=allowed_pairs, allowed_last=allowed_last
    )


def format_instance(instance: Instance) -> str:
    lines = [str(instance.n)]
    for v in instance.vehicles:
        lines.append(f"{v.capacity} {v.rate}")
    if instance.adjacency is not None:
        lines.append("adjacency")
        for i in range(instance.n):
            for j in range(instance.n):
                if i != j and instance.adjacency[i][j]:
                    lines.append(f"{i + 1} {j + 1}")
    if instance.terminal_allowed is not None:
        lines.append("terminals")
        allowed = [str(i + 1) for i, ok in enumerate(instance.terminal_allowed) if ok]
        if allowed:
            lines.append(" ".join(allowed))
    return "\n".join(lines) + "\n"


def parse_digraph(text: str, source="<string>") -> Digraph:
    """Parse graph text; errors carry the offending line number."""
    cur = _Cursor(text, source)
    lineno, head = cur.take("a 'vertices edges' line")
    tokens = head.split()
    if len(tokens) != 2:
        raise cur.error(f"expected 'n m', got {head!r}", lineno)
    n = _parse_int(tokens[0], source, lineno, "vertex count")
    m = _parse_int(tokens[1], source, lineno, "edge count")
    if n < 1:
        raise cur.error(f"vertex count must be at least 1, got {n}", lineno)
    if m < 0:
        raise cur.error(f"edge count must be nonnegative, got {m}", lineno)
    edges = set()
    for _ in range(m):
        lineno, line = cur.take(f"{m} edge lines")
        tokens = line.split()
        if len(tokens) != 2:
            raise cur.error(f"expected 'u v', got {line!r}", lineno)
        u = _parse_int(tokens[0], source, lineno, "vertex")
        v = _parse_int(tokens[1], source, lineno, "vertex")
        if not (1 <= u <= n and 1 <= v <= n):
            raise cur.error(f"edge ({u}, {v}) out of range 1..{n}", lineno)
        if u == v:
            raise cur.error(f"self-loop ({u}, {v}) not allowed", lineno)
        edges.add((u, v))
    item = cur.peek()
    if item is not None:
        raise cur.error(f"unexpected content {item[1]!r} after {m} edges", item[0])
    return Digraph(n, frozenset(edges))


def format_digraph(g: Digraph) -> str:
    lines = [f"{g.vertex_count} {g.edge_count}"]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_instance(handle.read(), source=str(path))


def load_digraph(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_digraph(handle.read(), source=str(path))
