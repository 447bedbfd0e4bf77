"""Order-preserving extension of an interval representation of one graph
power to the next."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InvalidKError,
    ParseError,
    RepresentationMismatchError,
    VertexSetMismatchError,
)
from .graphs import bfs_distances, graph_power
from .intervals import IntervalRepresentation, intersection_graph, normalize


@dataclass(frozen=True)
class ExtensionTrace:
    """Audit record of a single extension step.

    scale is the factor applied to the normalized input coordinates.
    witness[x] is the vertex whose left endpoint received the stretched
    right endpoint of x, or None when x kept its own (scaled) right
    endpoint.  new_right[x] is the resulting right endpoint, already in
    output coordinates.
    """

    k: int
    scale: int
    witness: tuple
    new_right: tuple


def extend_representation(g, k, r):
    """Turn a representation of the (k-1)-th power of g into one of the k-th.

    The input is normalized so no coordinate both closes one interval and
    opens another, then scaled by n + 1, which leaves a gap of n free
    integer slots after every endpoint.  Each vertex x looks at the
    vertices exactly k away whose intervals start to the right of its own;
    if any exist, the right endpoint of x moves just past the largest such
    left endpoint, into the gap.  Vertices stretched into the same gap are
    laid out by the order of their original right endpoints, so both
    endpoint orders survive.

    Returns the new representation and an ExtensionTrace.
    """
    if k < 2:
        raise InvalidKError(f"extension requires k >= 2, got {k}")
    if r.n != g.n:
        raise VertexSetMismatchError(
            f"graph has {g.n} vertices, representation has {r.n}"
        )
    expected = graph_power(g, k - 1)
    actual = intersection_graph(r)
    if actual != expected:
        message, pair = _mismatch_detail(expected, actual, k - 1)
        raise RepresentationMismatchError(message, pair)

    base = normalize(r)
    n = g.n
    scale = n + 1
    witness = [None] * n
    for x in range(n):
        dist = bfs_distances(g, x)
        start = base.left(x)
        best = None
        for y in range(n):
            if dist[y] == k and base.left(y) > start:
                if best is None or base.left(y) > base.left(best):
                    best = y
        witness[x] = best

    new_right = [scale * base.right(x) for x in range(n)]
    gaps = {}
    for x in range(n):
        if witness[x] is not None:
            gaps.setdefault(base.left(witness[x]), []).append(x)
    for anchor, members in gaps.items():
        slot = {
            value: i + 1
            for i, value in enumerate(sorted({base.right(x) for x in members}))
        }
        for x in members:
            new_right[x] = scale * anchor + slot[base.right(x)]

    extended = IntervalRepresentation(
        (scale * base.left(x), new_right[x]) for x in range(n)
    )
    trace = ExtensionTrace(
        k=k, scale=scale, witness=tuple(witness), new_right=tuple(new_right)
    )
    return extended, trace


def _mismatch_detail(expected, actual, power):
    missing = expected.edge_set - actual.edge_set
    extra = actual.edge_set - expected.edge_set
    u, v = min(missing | extra)
    if (u, v) in missing:
        message = (
            f"representation does not realize the required power: vertices "
            f"{u + 1} and {v + 1} are within distance {power} but their "
            f"intervals are disjoint"
        )
    else:
        message = (
            f"representation does not realize the required power: intervals "
            f"of vertices {u + 1} and {v + 1} intersect but the vertices are "
            f"more than {power} apart"
        )
    return message, (u, v)


def iterate_powers(g, r, k_max):
    """Chain extensions from a representation of g up to its k_max-th power.

    Returns a list of (k, representation, trace) for k = 2..k_max; each
    step feeds the previous output back in, so every chain member keeps
    the endpoint orders of r.
    """
    if k_max < 2:
        raise InvalidKError(f"iteration requires k_max >= 2, got {k_max}")
    chain = []
    current = r
    for k in range(2, k_max + 1):
        current, trace = extend_representation(g, k, current)
        chain.append((k, current, trace))
    return chain


def format_trace(trace):
    """Render a trace: header "k scale", then lines "x witness new_right"
    with "-" for a missing witness.  Vertex ids are 1-based."""
    lines = [f"{trace.k} {trace.scale}"]
    for x, right in enumerate(trace.new_right):
        w = trace.witness[x]
        label = "-" if w is None else str(w + 1)
        lines.append(f"{x + 1} {label} {right}")
    return "\n".join(lines) + "\n"


def parse_trace(text, source="<trace>"):
    lines = text.splitlines()
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise ParseError(source, 1, "missing header line")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(source, 1, "header must be two integers: k scale")
    try:
        k, scale = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(source, 1, "header must be two integers: k scale") from None
    n = len(lines) - 1
    witness = [None] * n
    new_right = [None] * n
    seen = set()
    for i, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(parts) != 3:
            raise ParseError(source, i, "trace line must be: x witness new_right")
        try:
            x = int(parts[0])
            w = None if parts[1] == "-" else int(parts[1])
            right = int(parts[2])
        except ValueError:
            raise ParseError(source, i, "trace line must be: x witness new_right") from None
        if not 1 <= x <= n:
            raise ParseError(source, i, f"vertex {x} out of range 1..{n}")
        if x in seen:
            raise ParseError(source, i, f"vertex {x} listed twice")
        if w is not None and not 1 <= w <= n:
            raise ParseError(source, i, f"witness {w} out of range 1..{n}")
        seen.add(x)
        witness[x - 1] = None if w is None else w - 1
        new_right[x - 1] = right
    return ExtensionTrace(
        k=k, scale=scale, witness=tuple(witness), new_right=tuple(new_right)
    )


def load_trace(path):
    with open(path, encoding="utf-8") as handle:
        return parse_trace(handle.read(), source=str(path))


def save_trace(trace, path):
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(format_trace(trace))
