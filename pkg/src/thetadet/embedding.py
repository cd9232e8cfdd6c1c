"""Plane embeddings of signed graphs and the knot diagrams they describe.

A signed plane graph determines a link diagram (its medial link): one
crossing per edge, strands running around the corners of the faces, and
the edge sign choosing which strand goes over. The Tait graph of that
diagram, for the shading whose shaded regions surround the vertices, is
the original graph again. :func:`medial_diagram` implements this, which
lets symmetric Tait graphs be checked against an honest knot diagram.

:class:`SymmetricEmbedding` builds mirror-symmetric plane graphs from
points in the plane (the axis is the line ``x = 0``) and returns both the
:class:`~thetadet.symmetric.SymmetricTaitGraph` and a rotation system for
its expansion.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .pd import PDError, PlanarDiagram, diagram_from_tuples
from .symmetric import AXIS, LEFT, SymmetricTaitGraph, expand


@dataclass(frozen=True)
class PlaneGraph:
    """Signed graph with a rotation system.

    ``edges[e] = (u, v, w)``; dart ``2e`` leaves ``u`` and dart ``2e + 1``
    leaves ``v``. ``rotation[x]`` lists the darts at ``x`` counterclockwise.
    """

    vertex_count: int
    edges: tuple
    rotation: tuple

    def dart_vertex(self, d: int) -> int:
        u, v, _ = self.edges[d // 2]
        return u if d % 2 == 0 else v

    def face_count(self) -> int:
        succ = _ccw_successor(self)
        seen = set()
        faces = 0
        for d in range(2 * len(self.edges)):
            if d in seen:
                continue
            faces += 1
            while d not in seen:
                seen.add(d)
                # walk along d to its far end, then turn to the next dart clockwise
                d = succ[d ^ 1][1]
        return faces


def _ccw_successor(g: PlaneGraph) -> dict[int, tuple[int, int]]:
    """dart -> (next dart counterclockwise, previous dart counterclockwise)."""
    out = {}
    for darts in g.rotation:
        k = len(darts)
        for i, d in enumerate(darts):
            out[d] = (darts[(i + 1) % k], darts[(i - 1) % k])
    return out


def medial_tuples(g: PlaneGraph) -> tuple[list[tuple[int, int, int, int]], int]:
    """PD tuples of the medial link of ``g`` and its number of components.

    Crossing ``e`` sits on edge ``e``. With dart ``d`` leaving ``u`` and
    ``d'`` leaving ``v``, its arms counterclockwise are ``(d', right)``,
    ``(d, left)``, ``(d, right)``, ``(d', left)``; positive edges put the
    under-strand on arms 1 and 3, so both regions around the edge's
    endpoints sit in the corners swept from the under-strand.
    """
    if not g.edges:
        return [], 1
    succ = _ccw_successor(g)
    arms = []  # arms[e] = the four (dart, side) arms of crossing e
    arm_pos = {}
    for e in range(len(g.edges)):
        d, dp = 2 * e, 2 * e + 1
        four = [(dp, "R"), (d, "L"), (d, "R"), (dp, "L")]
        arms.append(four)
        for p, a in enumerate(four):
            arm_pos[a] = (e, p)

    # the arc through the corner after dart d joins (d, L) to (next_ccw(d), R)
    arc_end = {}
    for d, (nxt, _) in succ.items():
        arc_end[arm_pos[(d, "L")]] = arm_pos[(nxt, "R")]
        arc_end[arm_pos[(nxt, "R")]] = arm_pos[(d, "L")]

    label = {}  # (crossing, arm) -> label of the arc at that arm
    incoming = {}  # crossing -> positions entered, in traversal order
    components = 0
    next_label = 0
    for start in sorted(arc_end):
        if start in label:
            continue
        components += 1
        here = start  # we leave the crossing through this arm
        while here not in label:
            there = arc_end[here]
            label[here] = label[there] = next_label
            next_label += 1
            e, p = there
            incoming.setdefault(e, []).append(p)
            here = (e, (p + 2) % 4)

    tuples = []
    for e, (_, _, w) in enumerate(g.edges):
        under = (1, 3) if w > 0 else (0, 2)
        entry = next(p for p in incoming[e] if p in under)
        tuples.append(tuple(label[(e, (entry + k) % 4)] for k in range(4)))
    return tuples, components


def medial_diagram(g: PlaneGraph) -> PlanarDiagram:
    """Knot diagram whose Tait graph is ``g``; raises :class:`PDError` for links."""
    tuples, components = medial_tuples(g)
    if components != 1:
        raise PDError(f"medial diagram has {components} components")
    return diagram_from_tuples(tuples)


def _angle(p, q) -> float:
    return math.atan2(q[1] - p[1], q[0] - p[0])


def _mirror(p):
    return (-p[0], p[1])


class SymmetricEmbedding:
    """Incrementally build a mirror-symmetric plane graph.

    Left vertices need ``x < 0``; axis vertices sit at ``x = 0``. Each call
    that adds edges takes a list of path lengths, one per parallel copy:
    a copy of length ``k`` is a path of ``k`` edges through ``k - 1`` new
    degree-2 vertices, all with the same sign. Parallel copies fan out
    slightly so the rotation system stays planar; the caller is
    responsible for the skeleton segments not crossing each other.
    """

    def __init__(self, spread: float = 0.02):
        self.left_pos: list[tuple[float, float]] = []
        self.axis_pos: list[tuple[float, float]] = []
        self.left_edges = []  # (a, b, w, bend or None)
        self.axis_edges = []  # (i, j, w)
        self.cross_edges = []  # (i, w, bend)
        self.spread = spread

    def left_vertex(self, x: float, y: float):
        if x >= 0:
            raise ValueError("left vertices need x < 0")
        self.left_pos.append((x, y))
        return (LEFT, len(self.left_pos) - 1)

    def axis_vertex(self, y: float):
        self.axis_pos.append((0.0, y))
        return (AXIS, len(self.axis_pos) - 1)

    def pos(self, handle):
        side, i = handle
        return self.left_pos[i] if side == LEFT else self.axis_pos[i]

    def _offsets(self, count: int) -> list[float]:
        return [(c - (count - 1) / 2) * self.spread for c in range(count)]

    @staticmethod
    def _bend(p, q, offset: float):
        mx, my = (p[0] + q[0]) / 2, (p[1] + q[1]) / 2
        dx, dy = q[0] - p[0], q[1] - p[1]
        length = math.hypot(dx, dy)
        # left normal of p -> q
        return (mx - dy / length * offset * length, my + dx / length * offset * length)

    def _path(self, a, b, bend, length: int, make_vertex, add_edge):
        """Lay a path of ``length`` edges from ``a`` to ``b`` along the polyline via ``bend``."""
        pa, pb = self.pos(a), self.pos(b)
        if length == 1:
            add_edge(a, b, bend)
            return
        if bend is None:
            bend = ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
        pts = []
        for t in range(1, length):
            s = t / length
            if s <= 0.5:
                f = 2 * s
                pts.append((pa[0] + (bend[0] - pa[0]) * f, pa[1] + (bend[1] - pa[1]) * f))
            else:
                f = 2 * s - 1
                pts.append((bend[0] + (pb[0] - bend[0]) * f, bend[1] + (pb[1] - bend[1]) * f))
        chain = [a] + [make_vertex(p) for p in pts] + [b]
        for x, y in zip(chain, chain[1:]):
            add_edge(x, y, None)

    def left_edge(self, a, b, w, lengths: Sequence[int] = (1,)):
        """Edge(s) between left/axis vertices ``a`` and ``b``, mirrored on the right."""
        pa, pb = self.pos(a), self.pos(b)
        if a[0] == AXIS and b[0] == AXIS:
            raise ValueError("use axis_edge(..., side_lengths=...) for off-axis edges between axis vertices")
        for offset, length in zip(self._offsets(len(lengths)), lengths):
            bend = self._bend(pa, pb, offset)
            self._path(
                a, b, bend, length,
                lambda p: self.left_vertex(*p),
                lambda x, y, bd: self.left_edges.append((x, y, w, bd)),
            )

    def axis_edge(self, i, j, w, length: Optional[int] = 1, side_lengths: Sequence[int] = ()):
        """Edge on the axis between axis vertices ``i`` and ``j``.

        ``length`` subdivides the on-axis copy (``None`` omits it).
        ``side_lengths`` adds off-axis copies, each with a mirror image,
        bulging further from the axis with each entry.
        """
        a, b = (AXIS, i[1] if isinstance(i, tuple) else i), (AXIS, j[1] if isinstance(j, tuple) else j)
        pa, pb = self.pos(a), self.pos(b)
        if length is not None:
            self._path(
                a, b, None, length,
                lambda p: self.axis_vertex(p[1]),
                lambda x, y, bd: self.axis_edges.append((x[1], y[1], w)),
            )
        for k, side_length in enumerate(side_lengths, 1):
            mid = ((pa[0] + pb[0]) / 2, (pa[1] + pb[1]) / 2)
            bend = (mid[0] - k * self.spread * abs(pb[1] - pa[1]), mid[1])
            self._path(
                a, b, bend, side_length,
                lambda p: self.left_vertex(*p),
                lambda x, y, bd: self.left_edges.append((x, y, w, bd)),
            )

    def cross_edge(self, i, w, lengths: Sequence[int] = (1,)):
        """Edge(s) from left vertex ``i`` to its mirror image; lengths must be odd."""
        a = i if isinstance(i, tuple) else (LEFT, i)
        pa = self.pos(a)
        for offset, length in zip(self._offsets(len(lengths)), lengths):
            if length % 2 == 0:
                raise ValueError("a crossing path of even length would put a vertex on the axis")
            bend = (0.0, pa[1] + offset * abs(pa[0]))
            start = a
            half = (length - 1) // 2
            if half:
                pts = [(pa[0] + (bend[0] - pa[0]) * t / (half + 0.5), pa[1] + (bend[1] - pa[1]) * t / (half + 0.5))
                       for t in range(1, half + 1)]
                chain = [a] + [self.left_vertex(*p) for p in pts]
                for x, y in zip(chain, chain[1:]):
                    self.left_edges.append((x, y, w, None))
                start = chain[-1]
            self.cross_edges.append((start[1], w, bend))

    def build(self) -> tuple[SymmetricTaitGraph, PlaneGraph]:
        s = SymmetricTaitGraph(
            len(self.left_pos),
            len(self.axis_pos),
            [(a, b, w) for a, b, w, _ in self.left_edges],
            self.axis_edges,
            [(i, w) for i, w, _ in self.cross_edges],
        )
        full = expand(s)
        n, m = len(self.left_pos), len(self.axis_pos)
        pos = list(self.left_pos) + list(self.axis_pos) + [_mirror(p) for p in self.left_pos]

        # first point along each expanded edge, seen from either end
        toward = []
        for a, b, w, bend in self.left_edges:
            pa, pb = pos[s.index(a)], pos[s.index(b)]
            toward.append((bend or pb, bend or pa))
        for a, b, w, bend in self.left_edges:
            pa, pb = pos[s.index(a, True)], pos[s.index(b, True)]
            mb = _mirror(bend) if bend else None
            toward.append((mb or pb, mb or pa))
        for i, j, w in self.axis_edges:
            toward.append((pos[n + j], pos[n + i]))
        for i, w, bend in self.cross_edges:
            toward.append((bend, bend))

        plane = _rotation_from_angles(
            full.vertex_count,
            [(e.u, e.v, e.weight) for e in full.edges],
            [(_angle(pos[e.u], t[0]), _angle(pos[e.v], t[1])) for e, t in zip(full.edges, toward)],
        )
        self._built = s
        return s, plane

    def constituent_planes(self) -> tuple[PlaneGraph, PlaneGraph]:
        """Plane drawings of the two constituent Tait graphs.

        Vertex and edge order match :func:`~thetadet.symmetric.constituent_ab`
        and :func:`~thetadet.symmetric.constituent_bc`. The first is the right
        half of the drawing with each axis edge subdivided at its midpoint.
        The second is the left half with the axis and everything right of
        it collapsed to a hub, whose edges are ordered by where they meet
        the axis, top to bottom.
        """
        s = getattr(self, "_built", None) or self.build()[0]
        n, m = len(self.left_pos), len(self.axis_pos)

        # right half: axis 0..m-1, right vertices m..m+n-1, midpoints after
        pos = list(self.axis_pos) + [_mirror(p) for p in self.left_pos]

        def r(handle):
            side, i = handle
            return i if side == AXIS else m + i

        edges, angles = [], []
        for a, b, w, bend in self.left_edges:
            pa, pb = pos[r(a)], pos[r(b)]
            mb = _mirror(bend) if bend else None
            edges.append((r(a), r(b), w))
            angles.append((_angle(pa, mb or pb), _angle(pb, mb or pa)))
        for i, j, w in self.axis_edges:
            x = len(pos)
            pos.append((0.0, (self.axis_pos[i][1] + self.axis_pos[j][1]) / 2))
            for u, v in ((i, x), (x, j)):
                edges.append((u, v, w))
                angles.append((_angle(pos[u], pos[v]), _angle(pos[v], pos[u])))
        plane_ab = _rotation_from_angles(len(pos), edges, angles)

        # left half around a hub; hub keys sort counterclockwise = top to bottom
        hub = n
        edges, angles = [], []
        for a, b, w, bend in self.left_edges:
            if a[0] == AXIS and b[0] == AXIS:
                continue
            ends, keys = [], []
            for here, there in ((a, b), (b, a)):
                p = self.pos(here)
                toward = bend or self.pos(there)
                if here[0] == LEFT:
                    ends.append(here[1])
                    keys.append(_angle(p, toward))
                else:
                    ends.append(hub)
                    keys.append((-p[1], _angle(p, toward)))
            edges.append((ends[0], ends[1], w))
            angles.append(tuple(keys))
        for i, w, bend in self.cross_edges:
            p = self.left_pos[i]
            for k in (0, 1):
                tilt = (k - 0.5) * 1e-6
                edges.append((hub, i, w))
                angles.append(((-(bend[1] + tilt), 0.0), _angle(p, bend) + tilt))
        plane_bc = _rotation_from_angles(n + 1, edges, angles, mixed_keys=True)
        return plane_ab, plane_bc


def _rotation_from_angles(vertex_count, edges, keys, mixed_keys: bool = False) -> PlaneGraph:
    """Sort darts by their key at each vertex and check the result is planar."""
    darts: list[list] = [[] for _ in range(vertex_count)]
    for e, ((u, v, _), (ku, kv)) in enumerate(zip(edges, keys)):
        darts[u].append((_as_key(ku) if mixed_keys else ku, 2 * e))
        darts[v].append((_as_key(kv) if mixed_keys else kv, 2 * e + 1))
    rotation = tuple(tuple(d for _, d in sorted(ds)) for ds in darts)
    plane = PlaneGraph(vertex_count, tuple(edges), rotation)
    if edges and vertex_count - len(edges) + plane.face_count() != 2:
        raise ValueError("drawing is not planar")
    return plane


def _as_key(k):
    return k if isinstance(k, tuple) else (k,)


@dataclass(frozen=True)
class SymmetricKnot:
    symmetric: SymmetricTaitGraph
    plane: PlaneGraph
    diagram: PlanarDiagram
    embedding: SymmetricEmbedding


def _segments_cross(p1, p2, q1, q2) -> bool:
    """Proper crossing of two segments (shared endpoints do not count)."""
    if p1 in (q1, q2) or p2 in (q1, q2):
        return False

    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return (v > 1e-12) - (v < -1e-12)

    o1, o2 = orient(p1, p2, q1), orient(p1, p2, q2)
    o3, o4 = orient(q1, q2, p1), orient(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    return False


def random_symmetric_knot(
    rng: random.Random,
    left: tuple[int, int] = (1, 3),
    axis: tuple[int, int] = (1, 3),
    max_crossings: int = 12,
    attempts: int = 200,
) -> "SymmetricKnot":
    """Random strongly invertible knot, as a symmetric Tait graph and diagram.

    Points are scattered in the left half-plane and on the axis; straight
    edge orbits (left-left, left-axis, consecutive axis, horizontal cross
    edges above or below the axis vertices) are added greedily while they
    stay planar, then edges are randomly doubled or subdivided and signed.
    A candidate is kept only when its medial diagram is a single knot with
    at most ``max_crossings`` crossings. The axis vertices then form one
    interval of the axis, which is what makes the symmetry a strong
    inversion.
    """
    for _ in range(attempts):
        b = SymmetricEmbedding()
        n = rng.randint(*left)
        m = rng.randint(*axis)
        ys = sorted(rng.uniform(0.3, 0.7) for _ in range(m))
        axis_h = [b.axis_vertex(y) for y in ys]
        left_h = [b.left_vertex(-rng.uniform(0.2, 1.0), rng.uniform(0.0, 1.0)) for _ in range(n)]

        def mirror_seg(p, q):
            return _mirror(p), _mirror(q)

        segments = []
        orbits = []

        def try_add(kind, p, q, payload):
            segs = [(p, q)]
            if kind in ("left",):
                segs.append(mirror_seg(p, q))
            for s1 in segs:
                for s2 in segments:
                    if _segments_cross(*s1, *s2):
                        return
            # a segment must not run through another vertex
            for s1 in segs:
                for v in [b.pos(h) for h in axis_h + left_h] + [_mirror(b.pos(h)) for h in left_h]:
                    if v in s1:
                        continue
                    if _point_on_segment(v, *s1):
                        return
            segments.extend(segs)
            orbits.append((kind, payload))

        for k in range(m - 1):
            try_add("axis", b.pos(axis_h[k]), b.pos(axis_h[k + 1]), (k, k + 1))
        candidates = []
        for i in range(n):
            for j in range(i + 1, n):
                candidates.append(("left", left_h[i], left_h[j]))
            for j in range(m):
                candidates.append(("left", left_h[i], axis_h[j]))
            y = b.pos(left_h[i])[1]
            if y > ys[-1] + 0.02 or y < ys[0] - 0.02:
                candidates.append(("cross", left_h[i], None))
        rng.shuffle(candidates)
        for kind, h1, h2 in candidates:
            if rng.random() < 0.35:
                continue
            if kind == "cross":
                p = b.pos(h1)
                try_add("cross", p, _mirror(p), h1)
            else:
                try_add("left", b.pos(h1), b.pos(h2), (h1, h2))

        def lengths():
            count = rng.choices([1, 2, 3], [6, 3, 1])[0]
            return [rng.choices([1, 2, 3], [6, 2, 1])[0] for _ in range(count)]

        try:
            for kind, payload in orbits:
                w = rng.choice((1, -1))
                if kind == "axis":
                    side = [rng.choice([1, 2]) for _ in range(rng.choices([0, 1], [4, 1])[0])]
                    b.axis_edge(payload[0], payload[1], w, length=rng.choice([1, 1, 2]), side_lengths=side)
                elif kind == "cross":
                    b.cross_edge(payload, w, [rng.choice([1, 1, 3]) for _ in range(rng.choice([1, 1, 2]))])
                else:
                    b.left_edge(payload[0], payload[1], w, lengths())
            s, plane = b.build()
        except ValueError:
            continue
        if len(plane.edges) > max_crossings or len(plane.edges) == 0:
            continue
        tuples, components = medial_tuples(plane)
        if components != 1:
            continue
        try:
            d = diagram_from_tuples(tuples)
        except PDError:
            continue
        return SymmetricKnot(s, plane, d, b)
    raise RuntimeError("no symmetric knot found; loosen the size limits")


def _point_on_segment(v, p, q, tol: float = 1e-9) -> bool:
    cross = (q[0] - p[0]) * (v[1] - p[1]) - (q[1] - p[1]) * (v[0] - p[0])
    if abs(cross) > tol:
        return False
    dot = (v[0] - p[0]) * (q[0] - p[0]) + (v[1] - p[1]) * (q[1] - p[1])
    return 0 < dot < (q[0] - p[0]) ** 2 + (q[1] - p[1]) ** 2
