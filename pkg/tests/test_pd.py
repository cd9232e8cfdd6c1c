import pytest

from thetadet.families import KNOT_FIXTURES, knot_fixture_names, load_knot, torus_pd
from thetadet.pd import (
    PDError,
    checkerboard,
    corner_faces,
    crossing_sign,
    diagram_from_tuples,
    face_adjacency,
    format_pd,
    goeritz_matrix,
    knot_determinant,
    outer_face,
    parse_pd,
    tait_graph,
    tait_graphs,
    trace_faces,
)
from thetadet.signed_graph import laplacian, tree_weight, tree_weight_oracle

TREFOIL = "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)"
KNOWN = {
    "0_1": 1, "3_1": 3, "4_1": 5, "5_1": 5, "5_2": 7, "6_1": 9, "6_2": 11, "6_3": 13,
    "7_1": 7, "7_2": 11, "7_3": 13, "7_4": 15, "7_5": 17, "7_6": 19, "7_7": 21,
}


def test_parse_trefoil():
    d = parse_pd(TREFOIL)
    assert d.crossing_count == 3
    assert d.edge_count == 6
    assert len(trace_faces(d)) == 5
    assert knot_determinant(d) == 3


@pytest.mark.parametrize("text", [
    "X[1,5,2,4], X[3,1,4,6], X[5,3,6,2]",
    "[X(1,5,2,4),X(3,1,4,6),X(5,3,6,2)]",
    "  X( 1, 5,2 ,4)\nX(3,1,4,6)  # comment\nX(5,3,6,2)",
    "X(11,15,12,14),X(13,11,14,16),X(15,13,16,12)",
])
def test_parse_variants(text):
    d = parse_pd(text)
    assert d == parse_pd(TREFOIL)


def test_two_crossing_unknot():
    d = parse_pd("X(1,2,2,3),X(3,4,4,1)")
    assert d.crossing_count == 2
    assert len(trace_faces(d)) == 4
    assert knot_determinant(d) == 1


def test_two_component_input_is_rejected():
    # two crossings between two circles: the Hopf link, not a knot
    with pytest.raises(PDError, match="component"):
        parse_pd("X(1,4,2,3),X(3,2,4,1)")


@pytest.mark.parametrize("text", [
    "X(1,2,3)",
    "X(1,2,3,4,5)",
    "X(1,2,3,4)",
    "X(1,1,1,1)",
    "X(1,5,2,4),X(3,1,4,6),X(5,3,6,2) junk",
    "X(0,5,2,4),X(3,0,4,6),X(5,3,6,2)",
    "Y(1,2,3,4)",
])
def test_parse_errors(text):
    with pytest.raises(PDError):
        parse_pd(text)


def test_empty_diagram_is_the_unknot():
    d = parse_pd("")
    assert d.crossing_count == 0
    g, h = tait_graphs(d)
    assert g.vertex_count == h.vertex_count == 1
    assert knot_determinant(d) == 1


def test_format_roundtrip():
    d = load_knot("7_4")
    assert parse_pd(format_pd(d)) == d


def test_outer_flag():
    d = parse_pd("outer=2, " + TREFOIL)
    assert d.outer == 2
    assert outer_face(d) == 2
    s, _ = checkerboard(d)
    assert s.color[2] == 1
    assert knot_determinant(d) == 3
    with pytest.raises(PDError):
        outer_face(parse_pd("outer=9 " + TREFOIL))


def test_default_outer_face_is_largest():
    d = parse_pd(TREFOIL)
    faces = trace_faces(d)
    assert len(faces[outer_face(d)]) == max(len(f) for f in faces)


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_fixture_determinants(name):
    assert knot_determinant(load_knot(name)) == KNOWN[name]


@pytest.mark.parametrize("name", KNOT_FIXTURES)
def test_non_minimal_diagrams_agree(name):
    small, big = load_knot(name), load_knot(name, "r")
    assert big.crossing_count > small.crossing_count
    assert knot_determinant(big) == knot_determinant(small)


@pytest.mark.parametrize("name", knot_fixture_names())
def test_face_count_and_coloring(name):
    d = load_knot(name)
    faces = trace_faces(d)
    assert len(faces) == d.crossing_count + 2
    s, t = checkerboard(d)
    assert s.color == tuple(1 - c for c in t.color)
    assert s.color[outer_face(d)] == 1
    for f, g in face_adjacency(d, faces):
        assert s.color[f] != s.color[g]


@pytest.mark.parametrize("name", knot_fixture_names())
def test_dual_pair(name):
    d = load_knot(name)
    g, h = tait_graphs(d)
    assert g.edge_count == h.edge_count == d.crossing_count
    assert g.vertex_count + h.vertex_count == d.crossing_count + 2
    assert sorted(e.tag for e in g.edges) == sorted(e.tag for e in h.edges)
    assert abs(tree_weight(g)) == abs(tree_weight(h))
    if d.crossing_count <= 12:
        assert abs(tree_weight_oracle(g)) == abs(tree_weight_oracle(h)) == abs(tree_weight(g))


def test_trefoil_tait_graphs():
    d = parse_pd(TREFOIL)
    shapes = sorted((g.vertex_count, g.edge_count) for g in tait_graphs(d))
    assert shapes == [(2, 3), (3, 3)]
    for g in tait_graphs(d):
        assert len({e.weight for e in g.edges}) == 1
        if g.vertex_count == 3:
            assert sorted((min(e.u, e.v), max(e.u, e.v)) for e in g.edges) == [(0, 1), (0, 2), (1, 2)]


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_torus_tait_graphs(n):
    d = torus_pd(n)
    shapes = sorted((g.vertex_count, g.edge_count) for g in tait_graphs(d))
    assert shapes == [(2, n), (n, n)]
    assert knot_determinant(d) == n


def test_trefoil_signs_agree_and_flip():
    d = parse_pd(TREFOIL)
    s, t = checkerboard(d)
    signs = {crossing_sign(d, x, s) for x in range(3)}
    assert len(signs) == 1
    for x in range(3):
        assert crossing_sign(d, x, t) == -crossing_sign(d, x, s)


@pytest.mark.parametrize("name", ["3_1", "4_1", "6_2_r", "7_6", "7_7_r"])
def test_sign_independent_of_orientation(name):
    d = load_knot(name)
    # reversing the knot makes the old outgoing under-arc the incoming one
    rev = diagram_from_tuples(c.arcs[2:] + c.arcs[:2] for c in d.crossings)
    s, _ = checkerboard(d)
    r, _ = checkerboard(rev)
    assert [crossing_sign(d, x, s) for x in range(d.crossing_count)] == [
        crossing_sign(rev, x, r) for x in range(rev.crossing_count)
    ]


@pytest.mark.parametrize("name", ["3_1", "4_1", "5_2", "7_5"])
def test_mirror_negates_signs(name):
    d = load_knot(name)
    mirror = diagram_from_tuples(c.arcs[1:] + c.arcs[:1] for c in d.crossings)
    s, _ = checkerboard(d)
    m, _ = checkerboard(mirror)
    # same faces, same outer face, so the shadings line up
    assert [crossing_sign(d, x, s) for x in range(d.crossing_count)] == [
        -crossing_sign(mirror, x, m) for x in range(d.crossing_count)
    ]
    assert knot_determinant(mirror) == knot_determinant(d)


def test_corner_faces_are_distinct_colors():
    d = load_knot("6_3")
    faces = trace_faces(d)
    s, _ = checkerboard(d)
    for x in range(d.crossing_count):
        a, b, c, e = corner_faces(d, x, faces)
        assert s.color[a] == s.color[c] != s.color[b] == s.color[e]


def test_trefoil_goeritz():
    d = parse_pd(TREFOIL)
    for s in checkerboard(d):
        q = goeritz_matrix(d, s)
        if q.dimension == 2:
            assert q in ([[3, -3], [-3, 3]], [[-3, 3], [3, -3]])
            assert abs(tree_weight(tait_graph(d, s))) == 3


@pytest.mark.parametrize("name", knot_fixture_names())
def test_goeritz_equals_tait_laplacian(name):
    d = load_knot(name)
    for s in checkerboard(d):
        q = goeritz_matrix(d, s)
        assert q == laplacian(tait_graph(d, s))
        for row in q.rows():
            assert sum(int(x) for x in row) == 0


def test_pivot_choice_does_not_matter():
    d = load_knot("7_7")
    assert {knot_determinant(d, delete=k) for k in range(8)} == {21}
