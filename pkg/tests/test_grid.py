from __future__ import annotations

import pytest

from pinecones.errors import InvalidArgument, NotFound
from pinecones.grid import Cell, Edge, GridGraph, Vertex, degree, diamond_graph, graph_difference


def cell_graph_oracle(width: int) -> tuple[set, set]:
    """Diamond built square by square from the row lengths 1, 3, ..., width, ..., 3, 1."""
    k = (width + 1) // 2
    verts, edges = set(), set()
    for t, length in enumerate(list(range(1, width + 1, 2)) + list(range(width - 2, 0, -2))):
        y = t - (k - 1)
        x0 = (width - length) // 2
        for x in range(x0, x0 + length):
            corners = [(x, y), (x + 1, y), (x, y + 1), (x + 1, y + 1)]
            verts.update(corners)
            edges.update({
                ((x, y), (x + 1, y)), ((x, y + 1), (x + 1, y + 1)),
                ((x, y), (x, y + 1)), ((x + 1, y), (x + 1, y + 1)),
            })
    return verts, edges


def test_diamond_width_1_is_one_square():
    g = diamond_graph(1)
    assert len(g.vertices) == 4 and len(g.edges) == 4
    assert g.vertices == {Vertex(0, 0), Vertex(1, 0), Vertex(0, 1), Vertex(1, 1)}


@pytest.mark.parametrize("width", range(1, 21, 2))
def test_diamond_matches_cell_oracle(width):
    verts, edges = cell_graph_oracle(width)
    g = diamond_graph(width)
    assert {tuple(v) for v in g.vertices} == verts
    assert {(tuple(e.a), tuple(e.b)) for e in g.edges} == edges
    k = (width + 1) // 2
    assert len(g.vertices) == 2 * k * (k + 1)


def test_diamond_anchor_and_parity():
    g = diamond_graph(9)
    # Longest row is the strip between ordinates 0 and 1, starting at x = 0.
    assert min(v.x for v in g.vertices) == 0
    assert {v.y for v in g.vertices if v.x == 0} == {0, 1}
    for e in g.edges:
        if e.vertical:
            assert e.even == ((e.a.x + e.a.y) % 2 == 0)


@pytest.mark.parametrize("width", [0, 2, -1, 4])
def test_diamond_rejects_bad_width(width):
    with pytest.raises(InvalidArgument):
        diamond_graph(width)


def test_degree():
    sq = diamond_graph(1)
    assert all(degree(sq, v) == 2 for v in sq.vertices)
    lone = GridGraph(frozenset({Vertex(3, 3)}))
    assert degree(lone, (3, 3)) == 0
    with pytest.raises(NotFound):
        degree(sq, (5, 5))
    g = diamond_graph(9)
    _, oracle_edges = cell_graph_oracle(9)
    for v in g.vertices:
        assert degree(g, v) == sum(tuple(v) in e for e in oracle_edges)
    # Interior vertices have degree 4, the two corners of the top square 2.
    assert degree(g, (4, 4)) == 4
    assert degree(g, (4, 5)) == 2 and degree(g, (5, 5)) == 2


def test_graph_difference():
    g = diamond_graph(5)
    assert graph_difference(g, g).is_empty
    assert graph_difference(g, GridGraph()) == g
    centre = GridGraph(frozenset({Vertex(2, 0), Vertex(3, 0), Vertex(2, 1), Vertex(3, 1)}))
    d = graph_difference(g, centre)
    assert d.vertices == g.vertices - centre.vertices
    expected = {e for e in g.edges if e.a not in centre.vertices and e.b not in centre.vertices}
    assert d.edges == expected
    assert d.edges <= g.edges


def test_edge_normalization_and_parity():
    e = Edge.between((1, 3), (1, 2))
    assert e == Edge.vertical_at(1, 2)
    assert e.vertical and not e.horizontal and not e.even
    assert Edge.vertical_at(1, 1).even
    h = Edge.between((3, 1), (2, 1))
    assert h == Edge.horizontal_at(2, 1) and h.horizontal and h.even is False
    assert Edge.horizontal_at(2, 0).even
    with pytest.raises(InvalidArgument):
        Edge.between((0, 0), (1, 1))
    assert Cell(0, 0).black and Cell(1, 1).black and not Cell(1, 0).black


def test_graph_rejects_dangling_edge():
    with pytest.raises(InvalidArgument):
        GridGraph(frozenset({Vertex(0, 0)}), frozenset({Edge.horizontal_at(0, 0)}))


def test_canonical_order_and_set_operations():
    g = diamond_graph(3)
    vs = g.sorted_vertices()
    assert vs == sorted(vs, key=lambda v: (v.y, v.x))
    t = g.translate(2, 4)
    assert t.normalized() == g.normalized()
    assert g.union(g) == g and g.intersection(g) == g
