"""Undirected multigraphs with dyadic edge weights and their tree weights.

The tree weight of a graph is the sum, over its spanning trees, of the
product of the edge weights in the tree. Two independent routes compute
it here:

* :func:`tree_weight` takes the exact determinant of a reduced Laplacian;
* :func:`tree_weight_oracle` enumerates spanning trees directly.

Self-loops and parallel edges are allowed everywhere.
"""

from __future__ import annotations

import random
import re
from typing import Iterable, NamedTuple, Optional

from .dyadic import ONE, ZERO, Dyadic
from .exact import ExactMatrix, det_exact

#: Brute-force enumeration refuses graphs with more (non-loop) edges than this.
ORACLE_EDGE_LIMIT = 24


class GraphError(ValueError):
    pass


class OracleLimitError(GraphError):
    """The brute-force tree enumerator was asked to handle a too-large graph."""


class Edge(NamedTuple):
    u: int
    v: int
    weight: Dyadic
    tag: Optional[object] = None

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


class SignedGraph:
    """An immutable weighted multigraph on vertices ``0 .. vertex_count-1``.

    ``edges`` accepts ``(u, v, w)`` or ``(u, v, w, tag)`` tuples; weights are
    coerced to :class:`Dyadic`. The optional tag records provenance, e.g. the
    index of the diagram crossing an edge came from.
    """

    __slots__ = ("vertex_count", "edges")

    def __init__(self, vertex_count: int, edges: Iterable = ()):
        if vertex_count < 1:
            raise GraphError("a graph needs at least one vertex")
        normalized = []
        for item in edges:
            u, v, w, *rest = item
            tag = rest[0] if rest else None
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
            normalized.append(Edge(int(u), int(v), Dyadic.coerce(w), tag))
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(normalized))

    def __setattr__(self, name, value):
        raise AttributeError("SignedGraph is immutable")

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __repr__(self):
        return f"SignedGraph({self.vertex_count}, {list(self.edges)!r})"

    def __eq__(self, other):
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def with_edges(self, edges: Iterable, vertex_count: Optional[int] = None) -> "SignedGraph":
        return SignedGraph(self.vertex_count if vertex_count is None else vertex_count, edges)

    def is_connected(self) -> bool:
        parent = list(range(self.vertex_count))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        components = self.vertex_count
        for e in self.edges:
            a, b = find(e.u), find(e.v)
            if a != b:
                parent[a] = b
                components -= 1
        return components == 1

    def weight_multiset(self) -> list[Dyadic]:
        return sorted(e.weight for e in self.edges)


def laplacian(g: SignedGraph) -> ExactMatrix:
    """Full weighted Laplacian.

    Off-diagonal entry ``(i, j)`` is minus the total weight joining ``i`` and
    ``j``; each diagonal entry makes its row sum to zero. Self-loops are
    ignored, consistent with their not appearing in any spanning tree.
    """
    n = g.vertex_count
    rows = [[ZERO] * n for _ in range(n)]
    for e in g.edges:
        if e.is_loop:
            continue
        rows[e.u][e.v] -= e.weight
        rows[e.v][e.u] -= e.weight
        rows[e.u][e.u] += e.weight
        rows[e.v][e.v] += e.weight
    return ExactMatrix(rows)


def reduced_laplacian(g: SignedGraph, delete: Optional[int] = None) -> ExactMatrix:
    """Laplacian with row and column ``delete`` removed (default: last vertex)."""
    if delete is None:
        delete = g.vertex_count - 1
    if not 0 <= delete < g.vertex_count:
        raise GraphError(f"vertex {delete} out of range 0..{g.vertex_count - 1}")
    return laplacian(g).minor(delete)


def tree_weight(g: SignedGraph, delete: Optional[int] = None) -> Dyadic:
    """Signed tree weight via the matrix-tree theorem.

    For weighted Laplacians the reduced determinant equals the signed tree
    weight, not just its absolute value; the test suite checks this against
    :func:`tree_weight_oracle`.
    """
    return det_exact(reduced_laplacian(g, delete))


def tree_weight_oracle(g: SignedGraph, max_edges: int = ORACLE_EDGE_LIMIT) -> Dyadic:
    """Signed tree weight by enumerating spanning trees.

    Walks the ``(n-1)``-element edge subsets in lexicographic order,
    abandoning a prefix as soon as it closes a cycle, so every subset that
    survives to full size is a spanning tree. Weights are scaled to integers
    up front; nothing here touches the Laplacian.
    """
    edges = [e for e in g.edges if not e.is_loop]
    if len(edges) > max_edges:
        raise OracleLimitError(
            f"{len(edges)} edges exceeds the brute-force limit of {max_edges}"
        )
    n = g.vertex_count
    need = n - 1
    if need == 0:
        return ONE
    if len(edges) < need:
        return ZERO

    scale = max(e.weight.exponent for e in edges)
    ends = [(e.u, e.v) for e in edges]
    ints = [e.weight.numerator << (scale - e.weight.exponent) for e in edges]
    m = len(edges)
    total = 0

    def walk(start, chosen, label, product):
        nonlocal total
        if chosen == need:
            total += product
            return
        # leave room for the remaining picks
        for i in range(start, m - (need - chosen) + 1):
            a, b = ends[i]
            la, lb = label[a], label[b]
            if la == lb:
                continue
            merged = [la if x == lb else x for x in label]
            walk(i + 1, chosen + 1, merged, product * ints[i])

    walk(0, 0, list(range(n)), 1)
    return Dyadic(total, scale * need)


def remove_self_loops(g: SignedGraph) -> SignedGraph:
    return g.with_edges(e for e in g.edges if not e.is_loop)


def split_multiedge(g: SignedGraph, index: int) -> SignedGraph:
    """Replace edge ``index`` by two parallel copies of half its weight."""
    if not 0 <= index < g.edge_count:
        raise GraphError(f"no edge with index {index}")
    e = g.edges[index]
    if e.is_loop:
        raise GraphError("cannot split a self-loop")
    half = e.weight.scaled(-1)
    edges = list(g.edges)
    edges[index : index + 1] = [e._replace(weight=half), e._replace(weight=half)]
    return g.with_edges(edges)


def subdivide_edge(g: SignedGraph, index: int) -> SignedGraph:
    """Subdivide a ``±1/2`` edge ``(a, b)`` into ``(a, x), (x, b)`` of weight ``±1``.

    The new vertex ``x`` gets the next free id. Absolute tree weight doubles.
    """
    if not 0 <= index < g.edge_count:
        raise GraphError(f"no edge with index {index}")
    e = g.edges[index]
    if abs(e.weight) != Dyadic(1, 1):
        raise GraphError(f"only ±1/2 edges can be subdivided, got {e.weight}")
    x = g.vertex_count
    w = Dyadic(1 if e.weight > 0 else -1)
    edges = list(g.edges)
    edges[index : index + 1] = [Edge(e.u, x, w, e.tag), Edge(x, e.v, w, e.tag)]
    return SignedGraph(x + 1, edges)


#: Weights drawn by :func:`random_signed_graph` unless told otherwise.
RANDOM_WEIGHTS = (Dyadic(-2), Dyadic(-1), Dyadic(-1, 1), Dyadic(1, 1), Dyadic(1), Dyadic(2))


def random_signed_graph(
    rng: random.Random,
    max_vertices: int = 8,
    max_edges: int = 20,
    weights=RANDOM_WEIGHTS,
    loop_chance: float = 0.05,
) -> SignedGraph:
    """Random multigraph, possibly disconnected, with loops and parallel edges."""
    n = rng.randint(1, max_vertices)
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        u = rng.randrange(n)
        if rng.random() < loop_chance:
            v = u
        elif n == 1:
            continue
        else:
            v = rng.choice([x for x in range(n) if x != u])
        edges.append((u, v, rng.choice(weights)))
    return SignedGraph(n, edges)


_GRAPH_HEADER = re.compile(r"^vertices\s*=\s*(\d+)$")


def parse_graph(text: str) -> SignedGraph:
    """Read the ``vertices=<n>`` / ``edge u v w`` text format.

    Blank lines and ``#`` comments are skipped. Weights may be integers or
    dyadic fractions such as ``-1/2``.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = _GRAPH_HEADER.match(line.replace(" ", ""))
            if not m:
                raise GraphError(f"line {lineno}: expected 'vertices=<n>' header")
            n = int(m.group(1))
            continue
        parts = line.split()
        if len(parts) != 4 or parts[0] != "edge":
            raise GraphError(f"line {lineno}: expected 'edge u v w', got {line!r}")
        try:
            u, v = int(parts[1]), int(parts[2])
            w = Dyadic.coerce(parts[3])
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
        edges.append((u, v, w))
    if n is None:
        raise GraphError("empty graph description")
    return SignedGraph(n, edges)


def format_graph(g: SignedGraph) -> str:
    lines = [f"vertices={g.vertex_count}"]
    lines.extend(f"edge {e.u} {e.v} {e.weight}" for e in g.edges)
    return "\n".join(lines) + "\n"
