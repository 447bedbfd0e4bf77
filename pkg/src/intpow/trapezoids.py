"""Trapezoid representations on two parallel lines and the exhaustive
search over endpoint interleavings."""

from __future__ import annotations

import itertools

from .errors import ParseError, VertexSetMismatchError
from .graphs import Graph
from .intervals import WeakOrder

LEFT = "L"
RIGHT = "R"


class TrapezoidRepresentation:
    """Per vertex, one closed integer interval on each of two lines.

    Row v is (l0, r0, l1, r1); degenerate rows where an interval is a
    single point are allowed.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        cleaned = []
        for v, row in enumerate(rows):
            l0, r0, l1, r1 = row
            if l0 > r0 or l1 > r1:
                raise ValueError(f"vertex {v}: interval endpoints out of order")
            cleaned.append((l0, r0, l1, r1))
        self.rows = tuple(cleaned)

    @property
    def n(self):
        return len(self.rows)

    def interval(self, v, line):
        l0, r0, l1, r1 = self.rows[v]
        return (l0, r0) if line == 0 else (l1, r1)

    def __eq__(self, other):
        if not isinstance(other, TrapezoidRepresentation):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"TrapezoidRepresentation({list(self.rows)!r})"


def trapezoid_intersection_graph(t):
    """Two trapezoids are disjoint exactly when one ends strictly before
    the other starts on both lines; every other pair is an edge."""
    edges = []
    for u in range(t.n):
        l0u, r0u, l1u, r1u = t.rows[u]
        for v in range(u + 1, t.n):
            l0v, r0v, l1v, r1v = t.rows[v]
            u_before_v = r0u < l0v and r1u < l1v
            v_before_u = r0v < l0u and r1v < l1u
            if not (u_before_v or v_before_u):
                edges.append((u, v))
    return Graph(t.n, edges)


def trapezoid_orders(t):
    """The four endpoint orders (L0, R0, L1, R1)."""
    return (
        WeakOrder.from_keys(row[0] for row in t.rows),
        WeakOrder.from_keys(row[1] for row in t.rows),
        WeakOrder.from_keys(row[2] for row in t.rows),
        WeakOrder.from_keys(row[3] for row in t.rows),
    )


def p5_representation():
    """A trapezoid representation of the path 1-2-3-4-5 whose endpoint
    orders are 1 3 2 5 4 on line 0 and 2 1 4 3 5 on line 1."""
    return TrapezoidRepresentation(
        [
            (0, 1, 4, 5),
            (6, 7, 3, 4),
            (4, 5, 8, 9),
            (10, 11, 6, 7),
            (8, 9, 12, 13),
        ]
    )


class Interleaving:
    """One line's endpoint sequence: 2n tagged events, each vertex opening
    before it closes."""

    __slots__ = ("events",)

    def __init__(self, events):
        events = tuple((tag, v) for tag, v in events)
        opened = set()
        closed = set()
        for tag, v in events:
            if tag == LEFT:
                if v in opened:
                    raise ValueError(f"vertex {v} opens twice")
                opened.add(v)
            elif tag == RIGHT:
                if v not in opened:
                    raise ValueError(f"vertex {v} closes before opening")
                if v in closed:
                    raise ValueError(f"vertex {v} closes twice")
                closed.add(v)
            else:
                raise ValueError(f"unknown event tag {tag!r}")
        if opened != closed or opened != set(range(len(events) // 2)):
            raise ValueError("events must pair one open and one close per vertex 0..n-1")
        self.events = events

    @property
    def n(self):
        return len(self.events) // 2

    def coordinates(self):
        """The (left, right) coordinate pair per vertex, using each event's
        position 0..2n-1 as its coordinate."""
        left = [0] * self.n
        right = [0] * self.n
        for position, (tag, v) in enumerate(self.events):
            if tag == LEFT:
                left[v] = position
            else:
                right[v] = position
        return list(zip(left, right))

    def __eq__(self, other):
        if not isinstance(other, Interleaving):
            return NotImplemented
        return self.events == other.events

    def __hash__(self):
        return hash(self.events)

    def __repr__(self):
        return "Interleaving(%s)" % "".join(f"{tag}{v}" for tag, v in self.events)


def enumerate_interleavings(left_order, right_order):
    """Return an iterator over every merge of the two endpoint sequences
    on one line.

    left_order and right_order must be strict; the merge keeps both
    subsequences intact and opens every vertex before closing it.  Results
    stream in lexicographic order, the open-event branch first.  Order
    validation happens eagerly, before the first item is requested.
    """
    if left_order.n != right_order.n:
        raise VertexSetMismatchError(
            f"orders cover {left_order.n} and {right_order.n} vertices"
        )
    opens = left_order.strict_sequence()
    closes = right_order.strict_sequence()
    n = len(opens)
    open_position = {v: i for i, v in enumerate(opens)}
    events = []

    def walk(i, j):
        if i == n and j == n:
            yield Interleaving(tuple(events))
            return
        if i < n:
            events.append((LEFT, opens[i]))
            yield from walk(i + 1, j)
            events.pop()
        if j < n and open_position[closes[j]] < i:
            events.append((RIGHT, closes[j]))
            yield from walk(i, j + 1)
            events.pop()

    return walk(0, 0)


def count_interleavings_filter(left_order, right_order):
    """Count the merges by filtering all C(2n, n) placements of the open
    events.  Brute-force cross-check for enumerate_interleavings."""
    opens = left_order.strict_sequence()
    closes = right_order.strict_sequence()
    n = len(opens)
    if right_order.n != n:
        raise VertexSetMismatchError(
            f"orders cover {n} and {right_order.n} vertices"
        )
    count = 0
    for open_slots in itertools.combinations(range(2 * n), n):
        slots = [None] * (2 * n)
        for i, position in enumerate(open_slots):
            slots[position] = (LEFT, opens[i])
        fill = iter(closes)
        for position in range(2 * n):
            if slots[position] is None:
                slots[position] = (RIGHT, next(fill))
        seen_open = set()
        for tag, v in slots:
            if tag == LEFT:
                seen_open.add(v)
            elif v not in seen_open:
                break
        else:
            count += 1
    return count


def search_representation(orders, target):
    """Exhaust every pair of line interleavings with the prescribed orders
    and test which ones realize the target graph.

    orders is (L0, R0, L1, R1), all strict, on the target's vertex set.
    Returns (first_match, match_count) where first_match is a
    TrapezoidRepresentation built from event positions (or None); pairs are
    scanned in lexicographic order, line 0 outermost.
    """
    l0, r0, l1, r1 = orders
    for order in orders:
        if order.n != target.n:
            raise VertexSetMismatchError(
                f"order covers {order.n} vertices, target graph {target.n}"
            )
    n = target.n
    adjacent = [[False] * n for _ in range(n)]
    for u, v in target.edge_set:
        adjacent[u][v] = True
        adjacent[v][u] = True
    line1 = [itl.coordinates() for itl in enumerate_interleavings(l1, r1)]
    first = None
    matches = 0
    for itl0 in enumerate_interleavings(l0, r0):
        c0 = itl0.coordinates()
        for c1 in line1:
            if _realizes(c0, c1, adjacent, n):
                matches += 1
                if first is None:
                    first = TrapezoidRepresentation(
                        (c0[v][0], c0[v][1], c1[v][0], c1[v][1]) for v in range(n)
                    )
    return first, matches


def _realizes(c0, c1, adjacent, n):
    for u in range(n):
        l0u, r0u = c0[u]
        l1u, r1u = c1[u]
        for v in range(u + 1, n):
            l0v, r0v = c0[v]
            l1v, r1v = c1[v]
            disjoint = (r0u < l0v and r1u < l1v) or (r0v < l0u and r1v < l1u)
            if disjoint == adjacent[u][v]:
                return False
    return True


def parse_trapezoid(text, source="<trapezoid>"):
    """Parse the trapezoid format: a line "n", then n lines "v l0 r0 l1 r1"."""
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError(source, 1, "missing header line")
    try:
        n = int(lines[0].strip())
    except ValueError:
        raise ParseError(source, 1, "header must be a single integer: n") from None
    if n < 0:
        raise ParseError(source, 1, "vertex count must be nonnegative")
    if len(lines) - 1 != n:
        raise ParseError(source, 1, f"expected {n} rows, found {len(lines) - 1}")
    rows = [None] * n
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 5:
            raise ParseError(source, i, "row must be five integers: v l0 r0 l1 r1")
        try:
            v, l0, r0, l1, r1 = (int(p) for p in parts)
        except ValueError:
            raise ParseError(source, i, "row must be five integers: v l0 r0 l1 r1") from None
        if not 1 <= v <= n:
            raise ParseError(source, i, f"vertex {v} out of range 1..{n}")
        if rows[v - 1] is not None:
            raise ParseError(source, i, f"vertex {v} listed twice")
        if l0 > r0 or l1 > r1:
            raise ParseError(source, i, "interval endpoints out of order")
        rows[v - 1] = (l0, r0, l1, r1)
    return TrapezoidRepresentation(rows)


def format_trapezoid(t):
    lines = [str(t.n)]
    for v, (l0, r0, l1, r1) in enumerate(t.rows):
        lines.append(f"{v + 1} {l0} {r0} {l1} {r1}")
    return "\n".join(lines) + "\n"


def load_trapezoid(path):
    with open(path, encoding="utf-8") as handle:
        return parse_trapezoid(handle.read(), source=str(path))


def save_trapezoid(t, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_trapezoid(t))


_ORDER_LABELS = ("L0", "R0", "L1", "R1")


def parse_orders(text, source="<orders>"):
    """Parse four labeled strict orders, one per line:

        L0: 1 3 2 5 4
        R0: ...
        L1: ...
        R1: ...

    Each line lists every vertex exactly once, 1-based, smallest first.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if len(lines) != 4:
        raise ParseError(source, max(1, len(lines)), "expected exactly four order lines")
    orders = []
    n = None
    for i, (label, line) in enumerate(zip(_ORDER_LABELS, lines), start=1):
        parts = line.split()
        if not parts or parts[0] != f"{label}:":
            raise ParseError(source, i, f'line must start with "{label}:"')
        try:
            sequence = [int(p) for p in parts[1:]]
        except ValueError:
            raise ParseError(source, i, "order entries must be integers") from None
        if n is None:
            n = len(sequence)
        if len(sequence) != n or sorted(sequence) != list(range(1, n + 1)):
            raise ParseError(
                source, i, f"order must list each vertex 1..{n} exactly once"
            )
        orders.append(WeakOrder.from_sequence([v - 1 for v in sequence]))
    return tuple(orders)


def format_orders(orders):
    lines = []
    for label, order in zip(_ORDER_LABELS, orders):
        sequence = " ".join(str(v + 1) for v in order.strict_sequence())
        lines.append(f"{label}: {sequence}")
    return "\n".join(lines) + "\n"


def load_orders(path):
    with open(path, encoding="utf-8") as handle:
        return parse_orders(handle.read(), source=str(path))


def save_orders(orders, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_orders(orders))
