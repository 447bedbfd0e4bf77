"""Interval representations: intersection graphs, endpoint orders, and
the proper / unit transformations."""

from __future__ import annotations

from .errors import (
    CoordinateOverflowError,
    InfeasibleConstraintsError,
    NonStrictOrderError,
    NotProperError,
    ParseError,
    VertexSetMismatchError,
)
from .graphs import Graph

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class IntervalRepresentation:
    """One closed integer interval [left, right] per vertex 0..n-1.

    Coordinates must stay within the signed 64-bit range; equal intervals
    on different vertices are allowed.
    """

    __slots__ = ("intervals",)

    def __init__(self, intervals):
        rows = []
        for v, (left, right) in enumerate(intervals):
            if left > right:
                raise ValueError(f"vertex {v}: left endpoint {left} exceeds right {right}")
            if left < INT64_MIN or right > INT64_MAX:
                raise CoordinateOverflowError(
                    f"vertex {v}: interval [{left}, {right}] leaves the 64-bit range"
                )
            rows.append((left, right))
        self.intervals = tuple(rows)

    @property
    def n(self):
        return len(self.intervals)

    def left(self, v):
        return self.intervals[v][0]

    def right(self, v):
        return self.intervals[v][1]

    def __eq__(self, other):
        if not isinstance(other, IntervalRepresentation):
            return NotImplemented
        return self.intervals == other.intervals

    def __hash__(self):
        return hash(self.intervals)

    def __repr__(self):
        return f"IntervalRepresentation({list(self.intervals)!r})"


class WeakOrder:
    """A weak order on vertices 0..n-1 stored as dense ranks.

    Ranks are exactly 0..max with ties sharing a rank, so two weak orders
    agree on every comparison iff their rank tuples are equal.
    """

    __slots__ = ("ranks",)

    def __init__(self, ranks):
        ranks = tuple(ranks)
        used = set(ranks)
        if used and used != set(range(len(used))):
            raise ValueError("ranks must be dense naturals starting at 0")
        self.ranks = ranks

    @classmethod
    def from_keys(cls, keys):
        """Dense-rank arbitrary comparable keys, ties sharing a rank."""
        keys = list(keys)
        rank_of = {key: i for i, key in enumerate(sorted(set(keys)))}
        return cls(rank_of[key] for key in keys)

    @classmethod
    def from_sequence(cls, sequence):
        """Strict order from a permutation of 0..n-1 listed smallest first."""
        sequence = list(sequence)
        n = len(sequence)
        if sorted(sequence) != list(range(n)):
            raise ValueError("sequence must be a permutation of 0..n-1")
        ranks = [0] * n
        for position, v in enumerate(sequence):
            ranks[v] = position
        return cls(ranks)

    @property
    def n(self):
        return len(self.ranks)

    @property
    def is_strict(self):
        return len(set(self.ranks)) == len(self.ranks)

    def compare(self, u, v):
        """-1, 0 or 1 as u precedes, ties with, or follows v."""
        a, b = self.ranks[u], self.ranks[v]
        return (a > b) - (a < b)

    def strict_sequence(self):
        """Vertices smallest-rank first; requires a strict order."""
        if not self.is_strict:
            raise NonStrictOrderError("order has ties, a strict order is required")
        return sorted(range(self.n), key=self.ranks.__getitem__)

    def tie_groups(self):
        """Vertices grouped by rank, groups ascending, ids ascending inside."""
        groups = [[] for _ in range(len(set(self.ranks)))]
        for v in range(self.n):
            groups[self.ranks[v]].append(v)
        return groups

    def __eq__(self, other):
        if not isinstance(other, WeakOrder):
            return NotImplemented
        return self.ranks == other.ranks

    def __hash__(self):
        return hash(self.ranks)

    def __repr__(self):
        return f"WeakOrder({list(self.ranks)!r})"


def intersection_graph(r):
    """Graph with an edge for every pair of intersecting intervals."""
    edges = []
    for u in range(r.n):
        lu, ru = r.intervals[u]
        for v in range(u + 1, r.n):
            lv, rv = r.intervals[v]
            if max(lu, lv) <= min(ru, rv):
                edges.append((u, v))
    return Graph(r.n, edges)


def endpoint_orders(r):
    """The weak orders induced by left and by right endpoints."""
    return (
        WeakOrder.from_keys(left for left, _ in r.intervals),
        WeakOrder.from_keys(right for _, right in r.intervals),
    )


def same_orders(first, second):
    """Whether two weak orders on the same vertex set agree on every pair."""
    if first.n != second.n:
        raise VertexSetMismatchError(
            f"orders cover {first.n} and {second.n} vertices"
        )
    return first.ranks == second.ranks


def _coincident_right_values(r):
    """Values serving simultaneously as a right endpoint and a left endpoint.

    A degenerate interval's shared coordinate counts: a point interval must
    grow too, otherwise a later rightward extension anchored at its left
    endpoint would overshoot its right endpoint and break the right order.
    """
    lefts = {left for left, _ in r.intervals}
    return {right for _, right in r.intervals if right in lefts}


def normalize(r):
    """Separate every coordinate that closes one interval and opens another.

    All coordinates are doubled, then every right endpoint sitting on a
    collision value is pushed one step right into the fresh odd gap.  The
    intersection graph and both endpoint orders are unchanged, every output
    interval has positive length, and no output coordinate is both a right
    and a left endpoint.  An input already satisfying those two properties
    is returned as is.
    """
    collisions = _coincident_right_values(r)
    if not collisions:
        return r
    rows = []
    for left, right in r.intervals:
        new_right = 2 * right + 1 if right in collisions else 2 * right
        rows.append((2 * left, new_right))
    return IntervalRepresentation(rows)


def is_proper(r):
    """Whether the left and right endpoint orders coincide."""
    left_order, right_order = endpoint_orders(r)
    return same_orders(left_order, right_order)


def find_containment_pair(r):
    """First pair (u, v) whose interval of u properly contains that of v.

    Returns None when no proper containment exists, which happens exactly
    when the representation is proper.
    """
    for u in range(r.n):
        lu, ru = r.intervals[u]
        for v in range(r.n):
            if u == v:
                continue
            lv, rv = r.intervals[v]
            if lu <= lv and rv <= ru and (lu, ru) != (lv, rv):
                return (u, v)
    return None


def proper_to_unit(r):
    """Rebuild a proper representation with every interval of length n*n.

    New left endpoints f(v) are the smallest naturals satisfying, for
    every pair u before v in the shared endpoint order:

      f(v) - f(u) >= 1                        (order kept strict)
      f(v) - f(u) <= n*n       if u, v adjacent
      f(v) - f(u) >= n*n + 1   otherwise

    with tied vertices forced equal.  The system is solved by single-source
    relaxation over the constraint edges (Bellman-Ford with a virtual
    source), which also detects infeasibility as a negative cycle; the
    distances are negated and shifted so that min f = 0, making the output
    canonical.
    """
    witness = find_containment_pair(r)
    if witness is not None:
        raise NotProperError(witness)
    n = r.n
    unit = n * n
    g = intersection_graph(r)
    left_order, _ = endpoint_orders(r)
    ranks = left_order.ranks
    # Relaxation edges (x, y, w) enforce dist[y] <= dist[x] + w; with
    # f = -dist this is f(y) >= f(x) - w, the lower-bound form above.
    edges = []
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            if ranks[u] < ranks[v]:
                edges.append((u, v, -1))
                if g.has_edge(u, v):
                    edges.append((v, u, unit))
                else:
                    edges.append((u, v, -(unit + 1)))
            elif ranks[u] == ranks[v] and u < v:
                edges.append((u, v, 0))
                edges.append((v, u, 0))
    dist = [0] * n
    for _ in range(n):
        changed = False
        for x, y, w in edges:
            if dist[x] + w < dist[y]:
                dist[y] = dist[x] + w
                changed = True
        if not changed:
            break
    else:
        for x, y, w in edges:
            if dist[x] + w < dist[y]:
                raise InfeasibleConstraintsError(
                    "difference constraints contain a negative cycle"
                )
    starts = [-d for d in dist]
    shift = min(starts, default=0)
    return IntervalRepresentation((s - shift, s - shift + unit) for s in starts)


def parse_representation(text, source="<representation>"):
    """Parse the representation format: a line "n", then n lines "v l r".

    Vertex ids are 1-based and each must appear exactly once.
    """
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
        raise ParseError(source, 1, f"expected {n} interval lines, found {len(lines) - 1}")
    rows = [None] * n
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(source, i, "interval line must be three integers: v l r")
        try:
            v, left, right = (int(p) for p in parts)
        except ValueError:
            raise ParseError(source, i, "interval line must be three integers: v l r") from None
        if not 1 <= v <= n:
            raise ParseError(source, i, f"vertex {v} out of range 1..{n}")
        if rows[v - 1] is not None:
            raise ParseError(source, i, f"vertex {v} listed twice")
        if left > right:
            raise ParseError(source, i, f"left endpoint {left} exceeds right {right}")
        if left < INT64_MIN or right > INT64_MAX:
            raise ParseError(source, i, "coordinate leaves the 64-bit range")
        rows[v - 1] = (left, right)
    return IntervalRepresentation(rows)


def format_representation(r):
    """Render a representation, vertices ascending, ids 1-based."""
    lines = [str(r.n)]
    for v, (left, right) in enumerate(r.intervals):
        lines.append(f"{v + 1} {left} {right}")
    return "\n".join(lines) + "\n"


def load_representation(path):
    with open(path, encoding="utf-8") as handle:
        return parse_representation(handle.read(), source=str(path))


def save_representation(r, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_representation(r))
