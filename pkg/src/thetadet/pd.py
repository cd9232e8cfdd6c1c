"""Planar diagram (PD) codes: faces, checkerboard shadings and Tait graphs.

A crossing is written ``X(a,b,c,d)``: the four arc labels met when going
counterclockwise around the crossing, starting from the incoming
under-strand. So ``a -> c`` is the under-strand and ``b, d`` is the over
strand.

Positions ``0..3`` of a crossing are its *arms*; *corner* ``i`` of a
crossing is the region between arm ``i`` and arm ``i+1``. Corners 0 and 2
are the ones swept by turning the under-strand counterclockwise onto the
over-strand, and the incidence sign of a crossing is ``+1`` exactly when
those two corners are shaded.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional

from .exact import ExactMatrix
from .signed_graph import SignedGraph, tree_weight


class PDError(ValueError):
    pass


class DisagreementError(RuntimeError):
    """Two computation routes that must agree did not."""


@dataclass(frozen=True)
class Crossing:
    arcs: tuple[int, int, int, int]

    def __post_init__(self):
        if len(self.arcs) != 4:
            raise PDError(f"a crossing needs 4 arcs, got {self.arcs}")

    def __str__(self):
        return "X({},{},{},{})".format(*self.arcs)


@dataclass(frozen=True)
class PlanarDiagram:
    crossings: tuple[Crossing, ...]
    outer: Optional[int] = None

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edge_count(self) -> int:
        return 2 * len(self.crossings)

    def __str__(self):
        return format_pd(self)


@dataclass(frozen=True)
class Shading:
    """Two-coloring of the faces; color 0 means shaded."""

    color: tuple[int, ...]

    def complement(self) -> "Shading":
        return Shading(tuple(1 - c for c in self.color))

    def shaded(self) -> list[int]:
        return [f for f, c in enumerate(self.color) if c == 0]


@dataclass(frozen=True)
class Faces:
    """Result of face tracing.

    ``cycles[f]`` lists the corners ``(crossing, i)`` of face ``f`` in
    boundary order; ``corner_face`` maps each corner back to its face.
    """

    cycles: tuple[tuple[tuple[int, int], ...], ...]
    corner_face: dict = field(compare=False, hash=False)

    def __len__(self):
        return len(self.cycles)

    def __iter__(self):
        return iter(self.cycles)

    def __getitem__(self, f):
        return self.cycles[f]


_TUPLE = re.compile(r"[Xx][(\[]([^)\]]*)[)\]]")
_OUTER = re.compile(r"^outer=(\d+)[,;]?")


def parse_pd(text: str) -> PlanarDiagram:
    """Parse ``X(a,b,c,d)`` tuples into a validated :class:`PlanarDiagram`.

    Arc labels are renumbered to ``1..2n`` preserving their order. An empty
    code is the crossingless unknot.
    """
    body = "".join(line.split("#", 1)[0] for line in text.splitlines())
    body = re.sub(r"\s+", "", body)
    outer = None
    m = _OUTER.match(body)
    if m:
        outer = int(m.group(1))
        body = body[m.end():]
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]

    tuples = []
    pos = 0
    for match in _TUPLE.finditer(body):
        gap = body[pos:match.start()]
        if gap.strip(",;"):
            raise PDError(f"unexpected text {gap!r} in PD code")
        pos = match.end()
        fields = match.group(1).split(",")
        if len(fields) != 4 or not all(f.isdigit() for f in fields):
            raise PDError(f"malformed crossing tuple X({match.group(1)})")
        t = tuple(int(f) for f in fields)
        if 0 in t:
            raise PDError(f"arc labels must be positive, got X({match.group(1)})")
        tuples.append(t)
    if body[pos:].strip(",;"):
        raise PDError(f"unexpected text {body[pos:]!r} in PD code")
    return diagram_from_tuples(tuples, outer=outer)


def diagram_from_tuples(tuples, outer: Optional[int] = None) -> PlanarDiagram:
    """Validate raw 4-tuples and build a diagram.

    Any non-negative labels are accepted here (0-based codes included); they
    are renumbered to ``1..2n``.
    """
    tuples = [tuple(t) for t in tuples]
    for t in tuples:
        if len(t) != 4:
            raise PDError(f"malformed crossing tuple {t}")
        if any(x < 0 for x in t):
            raise PDError(f"negative arc label in {t}")
    n = len(tuples)
    counts: dict[int, int] = {}
    for t in tuples:
        for x in t:
            counts[x] = counts.get(x, 0) + 1
    bad = sorted(x for x, k in counts.items() if k != 2)
    if bad:
        raise PDError(f"arc labels must appear exactly twice; offending labels {bad}")
    if len(counts) != 2 * n:
        raise PDError(f"{n} crossings need {2 * n} distinct arcs, found {len(counts)}")
    rank = {x: i + 1 for i, x in enumerate(sorted(counts))}
    crossings = tuple(Crossing(tuple(rank[x] for x in t)) for t in tuples)

    # strands continue a -> c and b -> d; one knot means one orbit of arcs
    parent = {x: x for x in range(1, 2 * n + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in crossings:
        a, b, cc, d = c.arcs
        parent[find(a)] = find(cc)
        parent[find(b)] = find(d)
    components = len({find(x) for x in parent})
    if n and components != 1:
        raise PDError(f"diagram has {components} components; only knots are supported")
    return PlanarDiagram(crossings, outer)


def format_pd(d: PlanarDiagram) -> str:
    head = f"outer={d.outer}," if d.outer is not None else ""
    return head + ",".join(str(c) for c in d.crossings)


def _arm_partner(d: PlanarDiagram) -> dict[tuple[int, int], tuple[int, int]]:
    where: dict[int, list[tuple[int, int]]] = {}
    for x, c in enumerate(d.crossings):
        for i, a in enumerate(c.arcs):
            where.setdefault(a, []).append((x, i))
    partner = {}
    for p, q in where.values():
        partner[p] = q
        partner[q] = p
    return partner


def trace_faces(d: PlanarDiagram) -> Faces:
    """Trace the faces of the underlying 4-valent plane graph.

    Leaving corner ``(x, i)`` along arm ``i+1`` arrives at arm ``j`` of the
    neighbouring crossing ``y``, and the face continues at corner ``(y, j)``.
    """
    n = d.crossing_count
    if n == 0:
        raise PDError("face tracing needs at least one crossing")
    partner = _arm_partner(d)
    corner_face: dict[tuple[int, int], int] = {}
    cycles = []
    for x in range(n):
        for i in range(4):
            if (x, i) in corner_face:
                continue
            f = len(cycles)
            cycle = []
            corner = (x, i)
            while corner not in corner_face:
                corner_face[corner] = f
                cycle.append(corner)
                cx, ci = corner
                corner = partner[(cx, (ci + 1) % 4)]
            if corner != (x, i):
                raise PDError("corner successor map is not a permutation")
            cycles.append(tuple(cycle))
    if len(cycles) != n + 2:
        raise PDError(
            f"Euler check failed: {n} crossings, {2 * n} arcs and {len(cycles)} faces "
            "do not describe a connected planar diagram"
        )
    return Faces(tuple(cycles), corner_face)


def face_adjacency(d: PlanarDiagram, faces: Optional[Faces] = None) -> list[tuple[int, int]]:
    """Pairs of faces on the two sides of each arc."""
    faces = faces or trace_faces(d)
    partner = _arm_partner(d)
    pairs = []
    seen = set()
    for (x, i), (y, j) in partner.items():
        if (y, j) in seen:
            continue
        seen.add((x, i))
        pairs.append((faces.corner_face[(x, (i - 1) % 4)], faces.corner_face[(y, (j - 1) % 4)]))
    return pairs


def two_color(face_count: int, adjacency) -> tuple[int, ...]:
    """Proper 2-coloring of a face-adjacency graph, face 0 getting color 0."""
    neighbours: list[list[int]] = [[] for _ in range(face_count)]
    for f, g in adjacency:
        if f == g:
            raise PDError(f"face {f} borders itself across an arc; not a valid diagram")
        neighbours[f].append(g)
        neighbours[g].append(f)
    color = [-1] * face_count
    color[0] = 0
    stack = [0]
    while stack:
        f = stack.pop()
        for g in neighbours[f]:
            if color[g] < 0:
                color[g] = 1 - color[f]
                stack.append(g)
            elif color[g] == color[f]:
                raise PDError("face adjacency has an odd cycle")
    if -1 in color:
        raise PDError("face adjacency graph is disconnected")
    return tuple(color)


def outer_face(d: PlanarDiagram, faces: Optional[Faces] = None) -> int:
    """Index of the unbounded face: the explicit ``outer=`` flag, else the largest face."""
    faces = faces or trace_faces(d)
    if d.outer is not None:
        if not 0 <= d.outer < len(faces):
            raise PDError(f"outer face {d.outer} out of range 0..{len(faces) - 1}")
        return d.outer
    return max(range(len(faces)), key=lambda f: (len(faces[f]), -f))


def checkerboard(d: PlanarDiagram) -> tuple[Shading, Shading]:
    """Both checkerboard shadings; the first leaves the unbounded face unshaded."""
    faces = trace_faces(d)
    color = two_color(len(faces), face_adjacency(d, faces))
    first = Shading(color)
    if color[outer_face(d, faces)] == 0:
        first = first.complement()
    return first, first.complement()


def corner_faces(d: PlanarDiagram, x: int, faces: Optional[Faces] = None) -> tuple[int, int, int, int]:
    faces = faces or trace_faces(d)
    return tuple(faces.corner_face[(x, i)] for i in range(4))


def crossing_sign(d: PlanarDiagram, x: int, s: Shading, faces: Optional[Faces] = None) -> int:
    """Goeritz incidence number of crossing ``x`` relative to the shaded faces."""
    f0, f1, f2, f3 = corner_faces(d, x, faces)
    if s.color[f0] != s.color[f2] or s.color[f1] != s.color[f3] or s.color[f0] == s.color[f1]:
        raise PDError(f"shading is not a checkerboard shading at crossing {x}")
    return 1 if s.color[f0] == 0 else -1


def tait_graph(d: PlanarDiagram, s: Shading, faces: Optional[Faces] = None) -> SignedGraph:
    """Tait graph of one shading: shaded faces as vertices, crossings as edges.

    Vertices are the shaded faces in increasing face order; each edge is
    tagged with the index of its crossing.
    """
    faces = faces or trace_faces(d)
    shaded = s.shaded()
    index = {f: k for k, f in enumerate(shaded)}
    edges = []
    for x in range(d.crossing_count):
        corners = corner_faces(d, x, faces)
        xi = crossing_sign(d, x, s, faces)
        if xi == 1:
            u, v = corners[0], corners[2]
        else:
            u, v = corners[1], corners[3]
        edges.append((index[u], index[v], xi, x))
    return SignedGraph(len(shaded), edges)


def tait_graphs(d: PlanarDiagram) -> tuple[SignedGraph, SignedGraph]:
    """The dual pair of Tait graphs, in the order returned by :func:`checkerboard`.

    Edge ``k`` of both graphs comes from crossing ``k``, which gives the
    bijection between an edge and its dual.
    """
    if d.crossing_count == 0:
        return SignedGraph(1), SignedGraph(1)
    faces = trace_faces(d)
    s, t = checkerboard(d)
    return tait_graph(d, s, faces), tait_graph(d, t, faces)


def goeritz_matrix(d: PlanarDiagram, s: Shading) -> ExactMatrix:
    """Full (unreduced) Goeritz matrix over the shaded regions of ``s``.

    Built straight from crossing incidences, without going through a graph.
    """
    faces = trace_faces(d)
    shaded = s.shaded()
    index = {f: k for k, f in enumerate(shaded)}
    size = len(shaded)
    q = [[0] * size for _ in range(size)]
    for x in range(d.crossing_count):
        corners = corner_faces(d, x, faces)
        xi = crossing_sign(d, x, s, faces)
        meeting = [index[f] for f in corners if s.color[f] == 0]
        i, j = meeting
        if i != j:
            q[i][j] -= xi
            q[j][i] -= xi
    for i in range(size):
        q[i][i] = -sum(q[i][k] for k in range(size) if k != i)
    return ExactMatrix(q)


def knot_determinant(d: PlanarDiagram, delete: Optional[int] = None) -> int:
    """``|det|`` of the knot, computed from both Tait graphs, which must agree.

    ``delete`` picks the reduced-Laplacian pivot (taken modulo each graph's
    vertex count); the answer does not depend on it.
    """
    g, h = tait_graphs(d)
    values = []
    for graph in (g, h):
        pivot = None if delete is None else delete % graph.vertex_count
        values.append(abs(tree_weight(graph, pivot)))
    if values[0] != values[1]:
        raise DisagreementError(
            f"shadings disagree on the determinant: {values[0]} vs {values[1]}"
        )
    return int(values[0])
