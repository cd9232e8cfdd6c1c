"""Tait graphs with an involutive symmetry, and the determinant of a theta curve.

A :class:`SymmetricTaitGraph` stores only the left half of the graph and
the vertices on the axis. The right half is the mirror image, so the
symmetry cannot be broken, and the only edges that cross the axis join a
left vertex to its own mirror image.

Vertex handles are ``("L", i)`` for the i-th left vertex and ``("C", j)``
for the j-th axis vertex (both 0-based). In an expanded graph the left
vertices come first, then the axis, then the mirror images of the left
vertices in the same order.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Optional

from .dyadic import Dyadic
from .pd import DisagreementError
from .signed_graph import ORACLE_EDGE_LIMIT, GraphError, SignedGraph, tree_weight, tree_weight_oracle

LEFT, AXIS = "L", "C"


def _vertex(handle) -> tuple[str, int]:
    side, index = handle
    if side not in (LEFT, AXIS):
        raise GraphError(f"bad vertex handle {handle!r}")
    return side, int(index)


@dataclass(frozen=True)
class SymmetricTaitGraph:
    """Half of an involution-symmetric signed graph plus its axis.

    ``left_edges`` hold ``(a, b, w)`` with vertex handles ``a, b``; at least
    one end is normally on the left. An edge between two axis vertices is
    also accepted there: it stands for an off-axis edge and its mirror
    image, as opposed to ``axis_edges``, which lie on the axis itself.
    ``cross_edges`` hold ``(i, w)`` for an edge from left vertex ``i`` to its
    mirror image.
    """

    left_count: int
    axis_count: int
    left_edges: tuple = ()
    axis_edges: tuple = ()
    cross_edges: tuple = ()

    def __post_init__(self):
        n, m = self.left_count, self.axis_count
        if n < 0:
            raise GraphError("negative number of left vertices")
        if m < 1:
            raise GraphError("the axis needs at least one vertex")
        left = []
        for a, b, w in self.left_edges:
            a, b = _vertex(a), _vertex(b)
            for side, i in (a, b):
                if not 0 <= i < (n if side == LEFT else m):
                    raise GraphError(f"vertex {(side, i)} out of range")
            if a[0] == AXIS and b[0] == AXIS and a[1] == b[1]:
                raise GraphError("an off-axis edge cannot be a loop at an axis vertex")
            left.append((a, b, _unit(w)))
        axis = []
        for i, j, w in self.axis_edges:
            if not (0 <= i < m and 0 <= j < m) or i == j:
                raise GraphError(f"bad axis edge ({i}, {j})")
            axis.append((int(i), int(j), _unit(w)))
        cross = []
        for i, w in self.cross_edges:
            if not 0 <= i < n:
                raise GraphError(f"cross edge at missing left vertex {i}")
            cross.append((int(i), _unit(w)))
        object.__setattr__(self, "left_edges", tuple(left))
        object.__setattr__(self, "axis_edges", tuple(axis))
        object.__setattr__(self, "cross_edges", tuple(cross))
        if not self.expand_unchecked().is_connected():
            raise GraphError("the expanded graph is disconnected")

    # vertex numbering of the expanded graph
    def index(self, handle, mirrored: bool = False) -> int:
        side, i = handle
        if side == AXIS:
            return self.left_count + i
        return self.left_count + self.axis_count + i if mirrored else i

    @property
    def vertex_count(self) -> int:
        return 2 * self.left_count + self.axis_count

    def mirror_permutation(self) -> list[int]:
        """The involution on expanded vertex ids."""
        n, m = self.left_count, self.axis_count
        return list(range(n + m, 2 * n + m)) + list(range(n, n + m)) + list(range(n))

    def expand_unchecked(self) -> SignedGraph:
        edges = []
        for k, (a, b, w) in enumerate(self.left_edges):
            edges.append((self.index(a), self.index(b), w, ("left", k)))
        for k, (a, b, w) in enumerate(self.left_edges):
            edges.append((self.index(a, True), self.index(b, True), w, ("right", k)))
        for k, (i, j, w) in enumerate(self.axis_edges):
            edges.append((self.index((AXIS, i)), self.index((AXIS, j)), w, ("axis", k)))
        for k, (i, w) in enumerate(self.cross_edges):
            edges.append((self.index((LEFT, i)), self.index((LEFT, i), True), w, ("cross", k)))
        return SignedGraph(self.vertex_count, edges)


def _unit(w) -> Dyadic:
    w = Dyadic.coerce(w)
    if abs(w) != 1:
        raise GraphError(f"symmetric Tait graph weights must be ±1, got {w}")
    return w


def expand(s: SymmetricTaitGraph) -> SignedGraph:
    """The full symmetric graph on ``V_L ∪ V_C ∪ V_R``.

    Edge order: left edges, their mirror images, axis edges, cross edges.
    """
    return s.expand_unchecked()


def g_right(s: SymmetricTaitGraph) -> SignedGraph:
    """Induced subgraph on the axis and the right side, axis edges at half weight.

    Vertices: axis vertices ``0..m-1``, then right vertices ``m..m+n-1``.
    """
    m = s.axis_count

    def idx(handle):
        side, i = handle
        return i if side == AXIS else m + i

    edges = [(idx(a), idx(b), w) for a, b, w in s.left_edges]
    edges += [(i, j, w.scaled(-1)) for i, j, w in s.axis_edges]
    return SignedGraph(m + s.left_count, edges)


def _hub_edges(s: SymmetricTaitGraph, doubled_cross: bool) -> list:
    n = s.left_count
    hub = n
    edges = []
    for a, b, w in s.left_edges:
        ends = [i if side == LEFT else hub for side, i in (a, b)]
        if ends == [hub, hub]:
            continue  # off-axis edge between axis vertices contracts to a loop
        edges.append((ends[0], ends[1], w))
    for i, w in s.cross_edges:
        if doubled_cross:
            edges += [(hub, i, w), (hub, i, w)]
        else:
            edges.append((hub, i, w.scaled(1)))
    return edges


def g_left(s: SymmetricTaitGraph) -> SignedGraph:
    """Left side plus a hub ``u`` (vertex ``n``) standing in for the axis.

    Cross edges become hub edges of twice the weight; edges to the axis
    become hub edges of the same weight; axis edges disappear.
    """
    return SignedGraph(s.left_count + 1, _hub_edges(s, doubled_cross=False))


def constituent_bc(s: SymmetricTaitGraph) -> SignedGraph:
    """Tait graph of the left-side constituent: like :func:`g_left` but each
    cross edge becomes a pair of parallel ``±1`` hub edges."""
    return SignedGraph(s.left_count + 1, _hub_edges(s, doubled_cross=True))


def constituent_ab(s: SymmetricTaitGraph) -> SignedGraph:
    """Tait graph of the axis-side constituent.

    The right side and the axis, with every axis edge subdivided into two
    edges of the original sign. New midpoint vertices are numbered after
    those of :func:`g_right`.
    """
    m, n = s.axis_count, s.left_count

    def idx(handle):
        side, i = handle
        return i if side == AXIS else m + i

    edges = [(idx(a), idx(b), w) for a, b, w in s.left_edges]
    next_id = m + n
    for i, j, w in s.axis_edges:
        edges += [(i, next_id, w), (next_id, j, w)]
        next_id += 1
    return SignedGraph(next_id, edges)


@dataclass(frozen=True)
class ThetaReport:
    det_full: int
    det_ab: int
    det_bc: int
    zy_value: Dyadic
    m: int
    tau_full: Dyadic
    tau_left: Dyadic
    tau_right: Dyadic
    product_agrees: bool
    zy_agrees: bool
    oracle_agrees: Optional[bool] = None

    @property
    def agreement(self) -> bool:
        return self.product_agrees and self.zy_agrees and self.oracle_agrees is not False

    @property
    def is_odd(self) -> bool:
        return self.det_full % 2 == 1

    @property
    def factors(self) -> tuple[int, int]:
        return tuple(sorted((self.det_ab, self.det_bc)))

    def items(self) -> list[tuple[str, object]]:
        """Flat key/value view, in a fixed order."""
        return [
            ("det_full", self.det_full),
            ("det_ab", self.det_ab),
            ("det_bc", self.det_bc),
            ("m", self.m),
            ("tau_full", self.tau_full),
            ("tau_left", self.tau_left),
            ("tau_right", self.tau_right),
            ("zy_value", self.zy_value),
            ("product_agrees", self.product_agrees),
            ("zy_agrees", self.zy_agrees),
            ("oracle_agrees", "skipped" if self.oracle_agrees is None else self.oracle_agrees),
            ("odd", self.is_odd),
        ]


def theta_determinant(
    s: SymmetricTaitGraph, oracle: bool = False, strict: bool = True
) -> ThetaReport:
    """Determinant of the theta curve by three routes.

    1. the tree weight of the full symmetric graph;
    2. ``2**(m-1) * tau(G_L) * tau(G_R)``;
    3. the product of the two constituent knots' tree weights.

    With ``oracle=True`` the full, left and right tree weights are also
    recomputed by spanning-tree enumeration. ``strict`` raises
    :class:`DisagreementError` instead of returning a report with a false
    agreement flag.
    """
    full = expand(s)
    left, right = g_left(s), g_right(s)
    tau_full = tree_weight(full)
    tau_left = tree_weight(left)
    tau_right = tree_weight(right)
    zy = Dyadic(1 << (s.axis_count - 1)) * tau_left * tau_right
    det_full = abs(tau_full)
    det_ab = abs(tree_weight(constituent_ab(s)))
    det_bc = abs(tree_weight(constituent_bc(s)))
    for name, value in (("det_full", det_full), ("det_ab", det_ab), ("det_bc", det_bc)):
        if not value.is_integer():
            raise DisagreementError(f"{name} = {value} is not an integer")

    oracle_ok = None
    if oracle:
        oracle_ok = (
            tree_weight_oracle(full) == tau_full
            and tree_weight_oracle(left) == tau_left
            and tree_weight_oracle(right) == tau_right
        )
    report = ThetaReport(
        det_full=int(det_full),
        det_ab=int(det_ab),
        det_bc=int(det_bc),
        zy_value=zy,
        m=s.axis_count,
        tau_full=tau_full,
        tau_left=tau_left,
        tau_right=tau_right,
        product_agrees=det_full == det_ab * det_bc,
        zy_agrees=abs(zy) == det_full,
        oracle_agrees=oracle_ok,
    )
    if strict and not report.agreement:
        raise DisagreementError(f"theta determinant routes disagree: {report.items()}")
    return report


def random_symmetric_graph(
    rng: random.Random,
    max_left: int = 6,
    max_axis: int = 3,
    density: float = 0.4,
    max_expanded_edges: int = ORACLE_EDGE_LIMIT,
    attempts: int = 1000,
) -> SymmetricTaitGraph:
    """Random connected symmetric graph with ``±1`` weights.

    Not necessarily planar, and not necessarily the Tait graph of a knot.
    The expansion is kept within ``max_expanded_edges`` non-loop edges so
    the brute-force oracle can check it.
    """
    for _ in range(attempts):
        n = rng.randint(0, max_left)
        m = rng.randint(1, max_axis)
        handles = [(LEFT, i) for i in range(n)] + [(AXIS, j) for j in range(m)]
        left, axis, cross = [], [], []
        for x in range(len(handles)):
            for y in range(x, len(handles)):
                a, b = handles[x], handles[y]
                if a[0] == AXIS and b[0] == AXIS:
                    continue
                if rng.random() < density:
                    left.append((a, b, rng.choice((1, -1))))
        for i in range(m):
            for j in range(i + 1, m):
                if rng.random() < density:
                    axis.append((i, j, rng.choice((1, -1))))
        for i in range(n):
            if rng.random() < density / 2:
                cross.append((i, rng.choice((1, -1))))
        # left loops expand to loops, which the oracle ignores
        size = sum(2 for a, b, _ in left if a != b) + len(axis) + len(cross)
        if size > max_expanded_edges:
            continue
        try:
            return SymmetricTaitGraph(n, m, tuple(left), tuple(axis), tuple(cross))
        except GraphError:
            continue
    raise RuntimeError("no connected symmetric graph found; raise the density")


_HANDLE = re.compile(r"^([vVwW])(\d+)$")


def _parse_handle(token: str):
    m = _HANDLE.match(token)
    if not m:
        raise GraphError(f"expected a vertex like v1 or w2, got {token!r}")
    side = LEFT if m.group(1) in "vV" else AXIS
    index = int(m.group(2)) - 1
    if index < 0:
        raise GraphError(f"vertex numbers start at 1: {token!r}")
    return side, index


def _parse_axis(token: str, prefix: str) -> int:
    token = token.lower()
    if token.startswith(prefix):
        token = token[1:]
    if not token.isdigit() or int(token) < 1:
        raise GraphError(f"bad vertex {token!r}")
    return int(token) - 1


def parse_symmetric(text: str) -> SymmetricTaitGraph:
    """Read the ``left=`` / ``axis=`` / ``ledge`` / ``aedge`` / ``xedge`` format.

    Vertices are written ``v1..vn`` (left) and ``w1..wm`` (axis).
    """
    header: dict[str, int] = {}
    left, axis, cross = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" in line:
            key, _, value = line.replace(" ", "").partition("=")
            if key not in ("left", "axis", "name") or (key != "name" and not value.isdigit()):
                raise GraphError(f"line {lineno}: bad header {line!r}")
            if key != "name":
                header[key] = int(value)
            continue
        parts = line.split()
        try:
            if parts[0] == "ledge" and len(parts) == 4:
                left.append((_parse_handle(parts[1]), _parse_handle(parts[2]), Dyadic.coerce(parts[3])))
            elif parts[0] == "aedge" and len(parts) == 4:
                axis.append((_parse_axis(parts[1], "w"), _parse_axis(parts[2], "w"), Dyadic.coerce(parts[3])))
            elif parts[0] == "xedge" and len(parts) == 3:
                cross.append((_parse_axis(parts[1], "v"), Dyadic.coerce(parts[2])))
            else:
                raise GraphError(f"unrecognised line {line!r}")
        except (ValueError, ZeroDivisionError) as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    if "left" not in header or "axis" not in header:
        raise GraphError("missing left=<n> or axis=<m> header")
    return SymmetricTaitGraph(header["left"], header["axis"], left, axis, cross)


def format_symmetric(s: SymmetricTaitGraph, name: Optional[str] = None) -> str:
    def h(handle):
        side, i = handle
        return f"{'v' if side == LEFT else 'w'}{i + 1}"

    lines = [f"name={name}"] if name else []
    lines += [f"left={s.left_count}", f"axis={s.axis_count}"]
    lines += [f"ledge {h(a)} {h(b)} {w}" for a, b, w in s.left_edges]
    lines += [f"aedge w{i + 1} w{j + 1} {w}" for i, j, w in s.axis_edges]
    lines += [f"xedge v{i + 1} {w}" for i, w in s.cross_edges]
    return "\n".join(lines) + "\n"
