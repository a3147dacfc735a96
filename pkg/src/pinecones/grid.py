"""Square-lattice graph primitives.

Vertices are integer lattice points, edges join points at distance 1.  A
:class:`GridGraph` is an immutable finite subgraph of the lattice; every other
module builds one of these and hands it to the matching engine.

Iteration order is canonical: vertices sort by ``(y, x)`` and edges by their
lower/left endpoint, so enumeration and serialization are deterministic.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple

from .errors import InvalidArgument, NotFound

__all__ = [
    "Vertex",
    "Edge",
    "Cell",
    "GridGraph",
    "vertex_key",
    "diamond_graph",
    "degree",
    "graph_difference",
]


class Vertex(NamedTuple):
    x: int
    y: int


def vertex_key(v: Vertex) -> tuple[int, int]:
    return (v[1], v[0])


class Edge(NamedTuple):
    """Undirected lattice edge stored as (left-or-lower, right-or-upper)."""

    a: Vertex
    b: Vertex

    @classmethod
    def between(cls, u: tuple[int, int], v: tuple[int, int]) -> "Edge":
        u, v = Vertex(*u), Vertex(*v)
        if abs(u.x - v.x) + abs(u.y - v.y) != 1:
            raise InvalidArgument(f"{u} and {v} are not lattice neighbours")
        if vertex_key(v) < vertex_key(u):
            u, v = v, u
        return cls(u, v)

    @classmethod
    def horizontal_at(cls, x: int, y: int) -> "Edge":
        return cls(Vertex(x, y), Vertex(x + 1, y))

    @classmethod
    def vertical_at(cls, x: int, y: int) -> "Edge":
        return cls(Vertex(x, y), Vertex(x, y + 1))

    @property
    def horizontal(self) -> bool:
        return self.a.y == self.b.y

    @property
    def vertical(self) -> bool:
        return self.a.x == self.b.x

    @property
    def even(self) -> bool:
        # Parity of the lower (vertical) or leftmost (horizontal) endpoint.
        return (self.a.x + self.a.y) % 2 == 0

    def translate(self, dx: int, dy: int) -> "Edge":
        return Edge(Vertex(self.a.x + dx, self.a.y + dy), Vertex(self.b.x + dx, self.b.y + dy))

    def __str__(self) -> str:
        return f"({self.a.x},{self.a.y})-({self.b.x},{self.b.y})"


class Cell(NamedTuple):
    """Unit cell of the lattice identified by its lower-left corner."""

    x: int
    y: int

    @property
    def black(self) -> bool:
        return (self.x + self.y) % 2 == 0


@dataclass(frozen=True)
class GridGraph:
    vertices: frozenset[Vertex] = frozenset()
    edges: frozenset[Edge] = frozenset()
    _adjacency: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        verts = frozenset(Vertex(*v) for v in self.vertices)
        edges = frozenset(Edge.between(e[0], e[1]) for e in self.edges)
        adjacency: dict[Vertex, list[Vertex]] = {v: [] for v in verts}
        for e in edges:
            if e.a not in adjacency or e.b not in adjacency:
                raise InvalidArgument(f"edge {e} has an endpoint outside the vertex set")
            adjacency[e.a].append(e.b)
            adjacency[e.b].append(e.a)
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "_adjacency", adjacency)

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], vertices: Iterable[Vertex] = ()) -> "GridGraph":
        edges = list(edges)
        verts = set(vertices)
        for e in edges:
            verts.add(e[0])
            verts.add(e[1])
        return cls(frozenset(verts), frozenset(edges))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    def sorted_vertices(self) -> list[Vertex]:
        return sorted(self.vertices, key=vertex_key)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (vertex_key(e.a), vertex_key(e.b)))

    def neighbors(self, v: Vertex) -> list[Vertex]:
        try:
            return list(self._adjacency[v])
        except KeyError:
            raise NotFound(f"vertex {tuple(v)} is not in the graph") from None

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: tuple[int, int], v: tuple[int, int]) -> bool:
        return Edge.between(u, v) in self.edges

    def degree_one_vertices(self) -> list[Vertex]:
        return [v for v in self.sorted_vertices() if len(self._adjacency[v]) == 1]

    def translate(self, dx: int, dy: int) -> "GridGraph":
        return GridGraph(
            frozenset(Vertex(v.x + dx, v.y + dy) for v in self.vertices),
            frozenset(e.translate(dx, dy) for e in self.edges),
        )

    def normalized(self) -> "GridGraph":
        """Translate so the minimal x and minimal y are both zero."""
        if self.is_empty:
            return self
        return self.translate(-min(v.x for v in self.vertices), -min(v.y for v in self.vertices))

    def induced(self, vertices: Iterable[Vertex]) -> "GridGraph":
        keep = frozenset(vertices) & self.vertices
        return GridGraph(keep, frozenset(e for e in self.edges if e.a in keep and e.b in keep))

    def difference(self, other: "GridGraph") -> "GridGraph":
        return graph_difference(self, other)

    def union(self, other: "GridGraph") -> "GridGraph":
        return GridGraph(self.vertices | other.vertices, self.edges | other.edges)

    def intersection(self, other: "GridGraph") -> "GridGraph":
        return GridGraph(self.vertices & other.vertices, self.edges & other.edges)

    def rows(self) -> dict[int, list[int]]:
        """Map each ordinate to the sorted abscissas of the vertices on it."""
        out: dict[int, list[int]] = defaultdict(list)
        for v in self.vertices:
            out[v.y].append(v.x)
        return {y: sorted(xs) for y, xs in sorted(out.items())}

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.sorted_vertices())


def degree(g: GridGraph, v: tuple[int, int]) -> int:
    return g.degree(Vertex(*v))


def graph_difference(g: GridGraph, h: GridGraph) -> GridGraph:
    """Vertices of ``g`` not in ``h``, with the edges of ``g`` minus ``h`` that survive."""
    keep = g.vertices - h.vertices
    return GridGraph(
        keep,
        frozenset(e for e in g.edges - h.edges if e.a in keep and e.b in keep),
    )


def _cells_graph(cells: Iterable[tuple[int, int]]) -> GridGraph:
    verts: set[Vertex] = set()
    edges: set[Edge] = set()
    for x, y in cells:
        verts.update((Vertex(x, y), Vertex(x + 1, y), Vertex(x, y + 1), Vertex(x + 1, y + 1)))
        edges.update((
            Edge.horizontal_at(x, y),
            Edge.horizontal_at(x, y + 1),
            Edge.vertical_at(x, y),
            Edge.vertical_at(x + 1, y),
        ))
    return GridGraph(frozenset(verts), frozenset(edges))


def diamond_graph(width: int) -> GridGraph:
    """Aztec diamond graph of odd ``width`` with its longest row starting at (0,0)."""
    if not isinstance(width, int) or width < 1 or width % 2 == 0:
        raise InvalidArgument(f"diamond width must be a positive odd integer, got {width!r}")
    half = (width - 1) // 2
    cells = [
        (x, r)
        for r in range(-half, half + 1)
        for x in range(abs(r), width - abs(r))
    ]
    return _cells_graph(cells)
