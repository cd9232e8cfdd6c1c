"""Knot and theta-curve determinants from Tait graphs and spanning trees."""

from .dyadic import Dyadic
from .pd import DisagreementError, PDError, PlanarDiagram, knot_determinant, parse_pd, tait_graphs
from .signed_graph import GraphError, OracleLimitError, SignedGraph, tree_weight, tree_weight_oracle
from .symmetric import SymmetricTaitGraph, ThetaReport, parse_symmetric, theta_determinant

__version__ = "0.1.0"

__all__ = [
    "DisagreementError",
    "Dyadic",
    "GraphError",
    "OracleLimitError",
    "PDError",
    "PlanarDiagram",
    "SignedGraph",
    "SymmetricTaitGraph",
    "ThetaReport",
    "knot_determinant",
    "parse_pd",
    "parse_symmetric",
    "tait_graphs",
    "theta_determinant",
    "tree_weight",
    "tree_weight_oracle",
]
