"""Reader and writer for the VAX text format.

One character per lattice point, top line = largest ordinate, column =
abscissa minus the smallest abscissa.  Letters:

    X   no edge to a lattice neighbour is omitted
    A   the upward edge is omitted
    V   the downward edge is omitted
    ' ' no vertex

Horizontally adjacent vertices are always joined.  A vertical edge between
two present vertices exists unless either endpoint marks it omitted; the
writer marks both endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import UnencodableGraph, VaxParseError
from .grid import Edge, GridGraph, Vertex

__all__ = ["VaxDocument", "vax_encode", "vax_decode", "read_vax", "write_vax"]

LETTERS = frozenset("XAV")


@dataclass(frozen=True)
class VaxDocument:
    lines: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lines", tuple(self.lines))

    @classmethod
    def parse(cls, text: str) -> "VaxDocument":
        lines = text.split("\n")
        while lines and not lines[-1].strip():
            lines.pop()
        return cls(tuple(line.rstrip("\r") for line in lines))

    @property
    def text(self) -> str:
        return "\n".join(self.lines)

    def __str__(self) -> str:
        return self.text


def vax_encode(g: GridGraph) -> VaxDocument:
    if g.is_empty:
        return VaxDocument(())
    xs = [v.x for v in g.vertices]
    ys = [v.y for v in g.vertices]
    x0, y1 = min(xs), max(ys)
    for v in g.vertices:
        right = Vertex(v.x + 1, v.y)
        if right in g.vertices and Edge.horizontal_at(v.x, v.y) not in g.edges:
            raise UnencodableGraph(f"horizontal edge {Edge.horizontal_at(v.x, v.y)} is omitted")
    lines = []
    for y in range(y1, min(ys) - 1, -1):
        row = [v.x for v in g.vertices if v.y == y]
        chars = [" "] * (max(row) - x0 + 1 if row else 0)
        for x in row:
            up_missing = Vertex(x, y + 1) in g.vertices and Edge.vertical_at(x, y) not in g.edges
            down_missing = Vertex(x, y - 1) in g.vertices and Edge.vertical_at(x, y - 1) not in g.edges
            if up_missing and down_missing:
                raise UnencodableGraph(f"vertex ({x},{y}) omits both vertical edges")
            chars[x - x0] = "A" if up_missing else "V" if down_missing else "X"
        lines.append("".join(chars).rstrip())
    return VaxDocument(tuple(lines))


def vax_decode(doc: VaxDocument | str) -> GridGraph:
    """Graph described by a VAX document; the bottom line is ordinate 0, column is abscissa."""
    if isinstance(doc, str):
        doc = VaxDocument.parse(doc)
    letters: dict[Vertex, str] = {}
    height = len(doc.lines)
    for t, line in enumerate(doc.lines):
        y = height - 1 - t
        for col, ch in enumerate(line):
            if ch == " ":
                continue
            if ch not in LETTERS:
                raise VaxParseError(f"unexpected character {ch!r}", t + 1, col + 1)
            letters[Vertex(col, y)] = ch
    edges = set()
    for v, ch in letters.items():
        right = Vertex(v.x + 1, v.y)
        if right in letters:
            edges.add(Edge(v, right))
        up = Vertex(v.x, v.y + 1)
        if up in letters and ch != "A" and letters[up] != "V":
            edges.add(Edge(v, up))
    return GridGraph(frozenset(letters), frozenset(edges))


def read_vax(path: str | Path) -> GridGraph:
    return vax_decode(Path(path).read_text(encoding="latin-1"))


def write_vax(g: GridGraph, path: str | Path) -> None:
    Path(path).write_text(vax_encode(g).text + "\n", encoding="latin-1")
