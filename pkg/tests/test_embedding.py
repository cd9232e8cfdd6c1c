"""Plane graphs, medial diagrams and the symmetric drawings behind the fixtures."""

import random

import pytest

from thetadet.embedding import PlaneGraph, SymmetricEmbedding, medial_diagram, medial_tuples, random_symmetric_knot
from thetadet.families import PretzelParams, embedding_948, load_knot, pretzel_embedding
from thetadet.pd import PDError, knot_determinant, trace_faces
from thetadet.signed_graph import tree_weight
from thetadet.symmetric import constituent_ab, constituent_bc, expand, theta_determinant


def theta_plane(k):
    """Two vertices joined by k parallel edges, drawn side by side."""
    edges = [(0, 1, 1)] * k
    # darts 2e leave vertex 0, 2e+1 leave vertex 1
    rotation = [[2 * e for e in range(k)], [2 * e + 1 for e in reversed(range(k))]]
    return PlaneGraph(2, edges, rotation)


@pytest.mark.parametrize("k", [3, 5, 7])
def test_medial_of_parallel_edges_is_torus_knot(k):
    d = medial_diagram(theta_plane(k))
    assert d.crossing_count == k
    assert len(trace_faces(d)) == k + 2
    assert knot_determinant(d) == k


def test_medial_of_even_bundle_is_a_link():
    tuples, components = medial_tuples(theta_plane(2))
    assert components == 2
    with pytest.raises(PDError):
        medial_diagram(theta_plane(2))


def test_plane_graph_face_count():
    assert theta_plane(4).face_count() == 4


def test_948_drawing():
    b = embedding_948()
    s, plane = b.build()
    d = medial_diagram(plane)
    assert d.crossing_count == 9
    assert knot_determinant(d) == 27
    assert knot_determinant(load_knot("9_48")) == 27
    ab, bc = b.constituent_planes()
    assert knot_determinant(medial_diagram(ab)) == abs(tree_weight(constituent_ab(s))) == 3
    assert knot_determinant(medial_diagram(bc)) == abs(tree_weight(constituent_bc(s))) == 9


@pytest.mark.parametrize("p,q", [(1, 2), (3, 2), (3, 4), (5, 6)])
def test_pretzel_drawing(p, q):
    b = pretzel_embedding(PretzelParams(p, q))
    s, plane = b.build()
    d = medial_diagram(plane)
    assert d.crossing_count == 2 * p + q // 2
    assert knot_determinant(d) == p * p + p * q
    ab, bc = b.constituent_planes()
    assert knot_determinant(medial_diagram(ab)) == p + q
    assert knot_determinant(medial_diagram(bc)) == p


def test_plane_edges_match_expanded_graph():
    s, plane = embedding_948().build()
    g = expand(s)
    assert plane.vertex_count == g.vertex_count
    assert sorted(tuple(sorted(e[:2])) for e in plane.edges) == sorted(
        tuple(sorted((e.u, e.v))) for e in g.edges
    )


def test_embedding_rejects_bad_input():
    b = SymmetricEmbedding()
    with pytest.raises(ValueError):
        b.left_vertex(0.5, 0.5)
    v = b.left_vertex(-1.0, 0.5)
    with pytest.raises(ValueError):
        b.cross_edge(v, 1, [2])


@pytest.mark.parametrize("seed", range(12))
def test_random_symmetric_knots(seed):
    k = random_symmetric_knot(random.Random(seed))
    r = theta_determinant(k.symmetric)
    assert r.agreement and r.is_odd
    assert knot_determinant(k.diagram) == r.det_full
    ab, bc = k.embedding.constituent_planes()
    assert knot_determinant(medial_diagram(ab)) == r.det_ab
    assert knot_determinant(medial_diagram(bc)) == r.det_bc
