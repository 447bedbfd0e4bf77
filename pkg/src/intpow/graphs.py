"""Simple undirected graphs, hop distances, and graph powers."""

from __future__ import annotations

from collections import deque

from .errors import InvalidKError, InvalidVertexError, ParseError

# Marker for vertices not reachable from the BFS source.
UNREACHABLE = None


class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    Edges are kept as a frozenset of (u, v) pairs with u < v; adjacency
    lists are derived once at construction and never mutated.
    """

    __slots__ = ("n", "edge_set", "_adjacency")

    def __init__(self, n, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        canonical = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidVertexError(
                    f"edge ({u}, {v}) out of range for {n} vertices"
                )
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            pair = (u, v) if u < v else (v, u)
            if pair in canonical:
                raise ValueError(f"duplicate edge {pair}")
            canonical.add(pair)
        self.n = n
        self.edge_set = frozenset(canonical)
        adjacency = [[] for _ in range(n)]
        for u, v in canonical:
            adjacency[u].append(v)
            adjacency[v].append(u)
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)

    @classmethod
    def path(cls, n):
        """The path on n vertices, 0 - 1 - ... - (n-1)."""
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def complete(cls, n):
        return cls(n, [(u, v) for u in range(n) for v in range(u + 1, n)])

    @property
    def m(self):
        return len(self.edge_set)

    def neighbors(self, v):
        if not 0 <= v < self.n:
            raise InvalidVertexError(f"vertex {v} out of range for {self.n} vertices")
        return self._adjacency[v]

    def degree(self, v):
        return len(self.neighbors(v))

    def has_edge(self, u, v):
        pair = (u, v) if u < v else (v, u)
        return pair in self.edge_set

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_set == other.edge_set

    def __hash__(self):
        return hash((self.n, self.edge_set))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def bfs_distances(g, source):
    """Hop distances from source to every vertex.

    Returns a list indexed by vertex; vertices in other components get
    UNREACHABLE (None).
    """
    if not 0 <= source < g.n:
        raise InvalidVertexError(f"vertex {source} out of range for {g.n} vertices")
    dist = [UNREACHABLE] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if dist[w] is UNREACHABLE:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def graph_power(g, k):
    """The k-th power of g: an edge for every pair at distance 1..k."""
    if k < 1:
        raise InvalidKError(f"graph power requires k >= 1, got {k}")
    edges = []
    for u in range(g.n):
        dist = bfs_distances(g, u)
        for v in range(u + 1, g.n):
            d = dist[v]
            if d is not UNREACHABLE and d <= k:
                edges.append((u, v))
    return Graph(g.n, edges)


def graph_power_oracle(g, k):
    """Brute-force k-th power via boolean matrix multiplication.

    Takes the k-fold product of (adjacency OR identity) and strips the
    diagonal.  Rows are bitmask integers, so this is a dense-matrix route
    with no code shared with the BFS implementation; intended for
    cross-checks at small n.
    """
    if k < 1:
        raise InvalidKError(f"graph power requires k >= 1, got {k}")
    n = g.n
    base = [1 << i for i in range(n)]
    for u, v in g.edge_set:
        base[u] |= 1 << v
        base[v] |= 1 << u
    result = [1 << i for i in range(n)]
    for _ in range(k):
        result = [_row_times_matrix(row, base) for row in result]
    edges = []
    for u in range(n):
        row = result[u] >> (u + 1)
        v = u + 1
        while row:
            if row & 1:
                edges.append((u, v))
            row >>= 1
            v += 1
    return Graph(n, edges)


def _row_times_matrix(row, matrix):
    acc = 0
    while row:
        low = row & -row
        acc |= matrix[low.bit_length() - 1]
        row ^= low
    return acc


def connected_components(g):
    """Vertex lists of the connected components.

    Each component is sorted ascending; components are ordered by their
    smallest vertex.
    """
    seen = [False] * g.n
    components = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        component = []
        while queue:
            u = queue.popleft()
            component.append(u)
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        components.append(sorted(component))
    return components


def parse_graph(text, source="<graph>"):
    """Parse the graph file format: a header line "n m", then m lines "u v".

    Vertex ids in the file are 1-based with u < v; loops, duplicates and
    out-of-range ids are rejected with the offending line number.
    """
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError(source, 1, "missing header line")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(source, 1, "header must be two integers: n m")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(source, 1, "header must be two integers: n m") from None
    if n < 0 or m < 0:
        raise ParseError(source, 1, "vertex and edge counts must be nonnegative")
    if len(lines) - 1 != m:
        raise ParseError(source, 1, f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    seen = set()
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(source, i, "edge line must be two integers: u v")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(source, i, "edge line must be two integers: u v") from None
        if u == v:
            raise ParseError(source, i, f"self-loop at vertex {u}")
        if not (1 <= u < v <= n):
            raise ParseError(source, i, f"edge ({u}, {v}) must satisfy 1 <= u < v <= {n}")
        if (u, v) in seen:
            raise ParseError(source, i, f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        edges.append((u - 1, v - 1))
    return Graph(n, edges)


def format_graph(g):
    """Render a graph in the file format, edges sorted, vertex ids 1-based."""
    lines = [f"{g.n} {g.m}"]
    for u, v in sorted(g.edge_set):
        lines.append(f"{u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def load_graph(path):
    with open(path, encoding="utf-8") as handle:
        return parse_graph(handle.read(), source=str(path))


def save_graph(g, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_graph(g))
