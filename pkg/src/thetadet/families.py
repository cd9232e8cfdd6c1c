"""Generators for example knots and theta curves, and the bundled theta table."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .embedding import PlaneGraph, SymmetricEmbedding
from .pd import PDError, PlanarDiagram, diagram_from_tuples, parse_pd
from .symmetric import SymmetricTaitGraph, parse_symmetric

KNOT_FIXTURES = (
    "0_1", "3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3",
    "7_1", "7_2", "7_3", "7_4", "7_5", "7_6", "7_7",
)


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class PretzelParams:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.p % 2 == 0:
            raise FamilyError(f"p must be an odd positive integer, got {self.p}")
        if self.q < 2 or self.q % 2:
            raise FamilyError(f"q must be an even integer >= 2, got {self.q}")

    @property
    def k(self) -> int:
        return self.q // 2

    @property
    def closed_form(self) -> int:
        return self.p * self.p + self.p * self.q


def pretzel_embedding(params: PretzelParams) -> SymmetricEmbedding:
    """Drawing of the Tait graph of the pretzel knot ``P(p, k, p)``.

    The shaded regions are the top and bottom regions and the bigons inside
    the twist columns. The middle column of ``k`` crossings lies on the
    axis; each outer column is a path of ``p`` edges from top to bottom, one
    on each side. All crossings have the same sign (the diagram is
    alternating).
    """
    b = SymmetricEmbedding(spread=0.5)
    top = b.axis_vertex(1.0)
    bottom = b.axis_vertex(0.0)
    b.axis_edge(top, bottom, 1, length=params.k, side_lengths=[params.p])
    return b


def pretzel_theta(params: PretzelParams) -> SymmetricTaitGraph:
    """Symmetric Tait graph of ``P(p, k, p)``, the strong inversion of theta(p, q)."""
    s, _ = pretzel_embedding(params).build()
    return s


def pretzel_pd(params: PretzelParams) -> PlanarDiagram:
    from .embedding import medial_diagram

    _, plane = pretzel_embedding(params).build()
    return medial_diagram(plane)


def torus_pd(n: int) -> PlanarDiagram:
    """Standard alternating ``n``-crossing diagram of the (2, n) torus knot."""
    if n < 3 or n % 2 == 0:
        raise FamilyError(f"T(2, n) needs odd n >= 3, got {n}")
    size = 2 * n

    def arc(x):
        return (x - 1) % size + 1

    return diagram_from_tuples(
        (arc(2 * k - 1), arc(2 * k - 1 + n), arc(2 * k), arc(2 * k + n)) for k in range(1, n + 1)
    )


def embedding_948() -> SymmetricEmbedding:
    """Hand-placed drawing of a symmetric Tait graph of 9_48.

    Two left vertices, two axis vertices and a doubled edge crossing the
    axis. The axis-side constituent is the trefoil and the hub-side
    constituent is 6_1.
    """
    b = SymmetricEmbedding()
    w1 = b.axis_vertex(0.6)
    w2 = b.axis_vertex(0.4)
    v1 = b.left_vertex(-0.5, 0.9)
    v2 = b.left_vertex(-0.5, 0.2)
    b.left_edge(v1, v2, 1)
    b.left_edge(v2, w2, 1)
    b.left_edge(v1, w1, -1)
    b.axis_edge(w1, w2, 1)
    b.cross_edge(v1, -1, [1, 1])
    return b


def _fixture_text(name: str) -> str:
    return resources.files("thetadet").joinpath("fixtures", name).read_text()


def fixture_path(name: str):
    return resources.files("thetadet").joinpath("fixtures", name)


def load_knot(name: str, variant: Optional[str] = None) -> PlanarDiagram:
    """Bundled PD code: ``load_knot("6_1")`` or the larger ``load_knot("6_1", "r")``."""
    stem = name if variant is None else f"{name}_{variant}"
    return parse_pd(_fixture_text(f"{stem}.pd"))


def load_symmetric(name: str) -> SymmetricTaitGraph:
    return parse_symmetric(_fixture_text(f"{name}.sym"))


def knot_fixture_names() -> list[str]:
    folder = resources.files("thetadet").joinpath("fixtures")
    return sorted(p.name[:-3] for p in folder.iterdir() if p.name.endswith(".pd"))


@dataclass(frozen=True)
class TableRecord:
    theta_name: str
    constituents: tuple[str, ...]
    constituent_dets: tuple[int, ...]
    theta_det: int

    @property
    def product(self) -> int:
        return math.prod(self.constituent_dets)

    @property
    def consistent(self) -> bool:
        return self.product == self.theta_det


def _parse_constituents(field: str) -> tuple[str, ...]:
    names = []
    for part in field.split(","):
        part = part.strip()
        count, _, knot = part.rpartition("x")
        names.extend([knot] * (int(count) if count else 1))
    return tuple(names)


def table_records() -> list[TableRecord]:
    """The 90 theta curves through seven crossings, from ``moriuchi_table.tsv``."""
    text = resources.files("thetadet").joinpath("data", "moriuchi_table.tsv").read_text()
    rows = csv.DictReader(
        (line for line in text.splitlines() if line and not line.startswith("#")),
        delimiter="\t",
    )
    records = []
    for row in rows:
        records.append(
            TableRecord(
                theta_name=row["theta_name"],
                constituents=_parse_constituents(row["constituents"]),
                constituent_dets=tuple(int(x) for x in row["constituent_dets"].split(",")),
                theta_det=int(row["theta_det"]),
            )
        )
    return records


__all__ = [
    "FamilyError",
    "KNOT_FIXTURES",
    "PDError",
    "PlaneGraph",
    "PretzelParams",
    "TableRecord",
    "embedding_948",
    "fixture_path",
    "knot_fixture_names",
    "load_knot",
    "load_symmetric",
    "pretzel_embedding",
    "pretzel_pd",
    "pretzel_theta",
    "table_records",
    "torus_pd",
]
