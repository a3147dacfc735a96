"""Pinecones: nested odd-length horizontal segments plus vertical edges.

A pinecone is stored in *standard* coordinates (longest row's lower-left
corner at the origin) together with a ``root`` translation.  The horizontal
segment at ordinate ``h`` starts at abscissa ``h - 1`` when ``h >= 1`` and at
``-h`` when ``h <= 0``; only its length is stored.  Even vertical edges are
implied, odd ones are listed by their lower endpoint.

Row ``r`` is the strip of cells between ordinates ``r`` and ``r + 1``.  The
odd edge with lower endpoint ``(u, r)`` is the right side of the black cell
``(u - 1, r)``, so the black squares of a pinecone and its odd edges are the
same data.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import InvalidArgument, PreconditionViolation
from .grid import Cell, Edge, GridGraph, Vertex

__all__ = [
    "Pinecone",
    "ClosednessReport",
    "from_black_squares",
    "from_odd_edges",
    "to_grid_graph",
    "is_closed",
    "black_squares",
    "is_interleaved",
    "union",
    "intersection",
    "single_square",
    "closed_pinecones",
    "MAX_COORD",
]

# Coordinates beyond this are rejected; desk-scale inputs stay far below it.
MAX_COORD = 1 << 16


def segment_start(h: int) -> int:
    """Abscissa of the left end of the segment at ordinate ``h`` (standard frame)."""
    return h - 1 if h >= 1 else -h


@dataclass(frozen=True)
class Pinecone:
    lengths: tuple[tuple[int, int], ...] = ()
    odd_edges: frozenset[Vertex] = frozenset()
    root: Vertex = Vertex(0, 0)
    _length_map: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self) -> None:
        lengths = tuple(sorted((int(h), int(n)) for h, n in self.lengths))
        odd = frozenset(Vertex(*v) for v in self.odd_edges)
        root = Vertex(*self.root)
        object.__setattr__(self, "lengths", lengths)
        object.__setattr__(self, "odd_edges", odd)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "_length_map", dict(lengths))
        self._validate()

    def _validate(self) -> None:
        tx, ty = self.root
        if (tx + ty) % 2:
            raise InvalidArgument(f"root {tuple(self.root)} must have an even coordinate sum")
        if abs(tx) > MAX_COORD or abs(ty) > MAX_COORD:
            raise InvalidArgument("root exceeds the supported coordinate range")
        if not self.lengths:
            if self.odd_edges:
                raise InvalidArgument("an empty pinecone cannot carry odd edges")
            return
        ords = [h for h, _ in self.lengths]
        lo, hi = ords[0], ords[-1]
        if ords != list(range(lo, hi + 1)) or lo > 0 or hi < 1:
            raise InvalidArgument(f"segment ordinates must be consecutive and cover 0 and 1, got {ords}")
        for h, n in self.lengths:
            if n < 1 or n % 2 == 0 or n > MAX_COORD:
                raise InvalidArgument(f"segment at ordinate {h} has invalid length {n}")
        L = self._length_map
        if L[0] != L[1]:
            raise InvalidArgument(f"segments at ordinates 0 and 1 differ ({L[0]} != {L[1]})")
        for h in range(lo, 0):
            if not L[h] < L[h + 1]:
                raise InvalidArgument(f"segment lengths must strictly increase up to ordinate 0 (ordinate {h})")
        for h in range(2, hi + 1):
            if not L[h] < L[h - 1]:
                raise InvalidArgument(f"segment lengths must strictly decrease above ordinate 1 (ordinate {h})")
        for u, r in self.odd_edges:
            if (u + r) % 2 == 0:
                raise InvalidArgument(f"edge at ({u},{r}) is even, not odd")
            if not lo <= r < hi:
                raise InvalidArgument(f"odd edge at ({u},{r}) lies outside the rows")
            if not abs(r) <= u <= self.row_boundary(r):
                raise InvalidArgument(f"odd edge at ({u},{r}) does not join two vertices")

    # -- shape -----------------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.lengths

    @property
    def width(self) -> int:
        """Number of cells in the longest row (0 for the empty pinecone)."""
        return self._length_map.get(0, 0)

    @property
    def segments(self) -> dict[int, int]:
        return dict(self._length_map)

    @property
    def ordinates(self) -> range:
        if self.is_empty:
            return range(0)
        return range(self.lengths[0][0], self.lengths[-1][0] + 1)

    @property
    def rows(self) -> range:
        if self.is_empty:
            return range(0)
        return range(self.lengths[0][0], self.lengths[-1][0])

    def segment(self, h: int) -> tuple[int, int]:
        start = segment_start(h)
        return start, start + self._length_map[h]

    def row_boundary(self, r: int) -> int:
        """Abscissa of the right boundary of row ``r`` (standard frame)."""
        return min(self.segment(r)[1], self.segment(r + 1)[1])

    def row_cells(self, r: int) -> range:
        return range(abs(r), self.row_boundary(r))

    # -- black squares ---------------------------------------------------------

    def squares_by_row(self) -> dict[int, list[int]]:
        """Absolute row -> sorted abscissas of black squares (lower-left corners)."""
        tx, ty = self.root
        out: dict[int, list[int]] = defaultdict(list)
        for u, r in self.odd_edges:
            out[r + ty].append(u - 1 + tx)
        return {r: sorted(xs) for r, xs in sorted(out.items())}

    def squares(self) -> frozenset[Cell]:
        tx, ty = self.root
        return frozenset(Cell(u - 1 + tx, r + ty) for u, r in self.odd_edges)

    @property
    def upper_rows(self) -> list[list[int]]:
        """Odd-edge abscissas of rows 0, 1, ... in decreasing order (standard frame)."""
        return [self._row_abscissas(r) for r in self.rows if r >= 0]

    @property
    def lower_rows(self) -> list[list[int]]:
        """Odd-edge abscissas of rows -1, -2, ... in decreasing order (standard frame)."""
        return [self._row_abscissas(r) for r in reversed(self.rows) if r < 0]

    def _row_abscissas(self, r: int) -> list[int]:
        return sorted((u for u, y in self.odd_edges if y == r), reverse=True)

    # -- geometry --------------------------------------------------------------

    def translate(self, dx: int, dy: int) -> "Pinecone":
        return Pinecone(self.lengths, self.odd_edges, Vertex(self.root.x + dx, self.root.y + dy))

    def at(self, root: tuple[int, int]) -> "Pinecone":
        return Pinecone(self.lengths, self.odd_edges, Vertex(*root))

    def standard(self) -> "Pinecone":
        return self.at((0, 0))

    def horizontal_edges(self, h: int) -> list[Edge]:
        """Absolute horizontal edges on the segment at (standard) ordinate ``h``."""
        if h not in self._length_map:
            return []
        tx, ty = self.root
        start, end = self.segment(h)
        return [Edge.horizontal_at(x + tx, h + ty) for x in range(start, end)]

    def left_edges(self) -> list[Edge]:
        """The leftmost edge of every horizontal segment, bottom to top."""
        return [self.horizontal_edges(h)[0] for h in self.ordinates]

    def to_grid_graph(self) -> GridGraph:
        return to_grid_graph(self)

    def rows_graph(self, rows: Iterable[int]) -> GridGraph:
        """Subgraph made of the cells of the given (standard) rows."""
        tx, ty = self.root
        verts: set[Vertex] = set()
        edges: set[Edge] = set()
        for r in rows:
            if r not in self.rows:
                continue
            left, right = abs(r), self.row_boundary(r)
            for y in (r, r + 1):
                for x in range(left, right + 1):
                    verts.add(Vertex(x + tx, y + ty))
                for x in range(left, right):
                    edges.add(Edge.horizontal_at(x + tx, y + ty))
            for x in range(left, right + 1):
                if (x + r) % 2 == 0 or Vertex(x, r) in self.odd_edges:
                    edges.add(Edge.vertical_at(x + tx, r + ty))
        return GridGraph(frozenset(verts), frozenset(edges))

    def __str__(self) -> str:
        if self.is_empty:
            return f"Pinecone(empty, root={tuple(self.root)})"
        rows = ", ".join(f"{r}:{self._row_abscissas(r)}" for r in self.rows)
        return f"Pinecone(root={tuple(self.root)}, width={self.width}, odd={{{rows}}})"


@dataclass(frozen=True)
class ClosednessReport:
    closed: bool
    offending_vertices: tuple[Vertex, ...] = ()

    def __bool__(self) -> bool:
        return self.closed


def _check_monotone(rows: Mapping[int, list[int]]) -> None:
    """Raise on the lowest row violating the monotone-set conditions (standard frame)."""
    for r, xs in sorted(rows.items()):
        for x in xs:
            if (x + r) % 2:
                raise InvalidArgument(f"cell ({x},{r}) is white, not black")
            if x < abs(r):
                raise InvalidArgument(f"cell ({x},{r}) lies outside the wedge |y| <= x")
    if not rows:
        return
    lo, hi = min(rows), max(rows)
    missing = [r for r in range(lo, hi + 1) if r not in rows]
    if 0 not in rows:
        raise InvalidArgument("row 0 contains no black square")
    if missing:
        raise InvalidArgument(f"occupied rows are not consecutive; row {missing[0]} is empty")
    for r in range(lo, hi + 1):
        if r > 0 and not rows[r][-1] < rows[r - 1][-1]:
            raise InvalidArgument(
                f"rightmost square of row {r} ({rows[r][-1]}) is not left of row {r - 1} ({rows[r - 1][-1]})"
            )
        if r < 0 and not rows[r][-1] < rows[r + 1][-1]:
            raise InvalidArgument(
                f"rightmost square of row {r} ({rows[r][-1]}) is not left of row {r + 1} ({rows[r + 1][-1]})"
            )


def from_black_squares(squares: Iterable[tuple[int, int]], root: tuple[int, int] = (0, 0)) -> Pinecone:
    """The unique closed pinecone rooted at ``root`` whose black squares are ``squares``.

    Squares are lower-left corners in absolute coordinates.  An empty input
    gives the empty pinecone.
    """
    tx, ty = root
    rows: dict[int, list[int]] = defaultdict(list)
    for x, y in set(map(tuple, squares)):
        rows[y - ty].append(x - tx)
    rows = {r: sorted(xs) for r, xs in rows.items()}
    _check_monotone(rows)
    if not rows:
        return Pinecone(root=Vertex(tx, ty))
    rightmost = {r: xs[-1] for r, xs in rows.items()}
    lo, hi = min(rows), max(rows)
    lengths = []
    for h in range(lo, hi + 2):
        if h >= 1:
            lengths.append((h, rightmost[h - 1] + 2 - h))
        else:
            lengths.append((h, rightmost[h] + 1 + h))
    odd = frozenset(Vertex(x + 1, r) for r, xs in rows.items() for x in xs)
    return Pinecone(tuple(lengths), odd, Vertex(tx, ty))


def from_odd_edges(edges: Iterable[tuple[int, int]], root: tuple[int, int] = (0, 0)) -> Pinecone:
    """Closed pinecone given the lower endpoints of its odd vertical edges."""
    return from_black_squares(((u - 1, r) for u, r in edges), root)


def single_square(root: tuple[int, int] = (0, 0)) -> Pinecone:
    return from_black_squares([root], root)


def to_grid_graph(p: Pinecone) -> GridGraph:
    if p.is_empty:
        return GridGraph()
    tx, ty = p.root
    verts: set[Vertex] = set()
    edges: set[Edge] = set()
    for h in p.ordinates:
        start, end = p.segment(h)
        for x in range(start, end + 1):
            verts.add(Vertex(x + tx, h + ty))
        for x in range(start, end):
            edges.add(Edge.horizontal_at(x + tx, h + ty))
    for r in p.rows:
        for x in range(abs(r), p.row_boundary(r) + 1):
            if (x + r) % 2 == 0 or Vertex(x, r) in p.odd_edges:
                edges.add(Edge.vertical_at(x + tx, r + ty))
    return GridGraph(frozenset(verts), frozenset(edges))


def _closed_by_faces(p: Pinecone) -> bool:
    # Closed iff the right boundary of every row is a present odd edge.
    return all(Vertex(p.row_boundary(r), r) in p.odd_edges for r in p.rows)


def is_closed(p: Pinecone) -> ClosednessReport:
    """Closedness via vertex degrees, cross-checked against the face criterion."""
    offending = tuple(to_grid_graph(p).degree_one_vertices())
    report = ClosednessReport(not offending, offending)
    if report.closed != _closed_by_faces(p):
        raise AssertionError(f"closedness criteria disagree on {p}")
    return report


def _require_closed(p: Pinecone, what: str) -> None:
    if not _closed_by_faces(p):
        raise PreconditionViolation(f"{what} requires a closed pinecone")


def black_squares(p: Pinecone) -> frozenset[Cell]:
    """Black squares of a closed pinecone, as absolute lower-left corners."""
    _require_closed(p, "black_squares")
    return p.squares()


def is_interleaved(p: Pinecone) -> bool:
    """Between two black squares of a row there is one in each adjacent row."""
    _require_closed(p, "is_interleaved")
    rows = p.squares_by_row()
    for r, xs in rows.items():
        for left, right in zip(xs, xs[1:]):
            for other in (r - 1, r + 1):
                if not any(left < x < right for x in rows.get(other, ())):
                    return False
    return True


def union(p: Pinecone, q: Pinecone) -> Pinecone:
    """Closed pinecone whose black squares are the union of those of ``p`` and ``q``."""
    if p.root != q.root:
        raise InvalidArgument("union requires pinecones with the same root")
    return from_black_squares(p.squares() | q.squares(), p.root)


def intersection(p: Pinecone, q: Pinecone) -> Pinecone:
    """Graph intersection of two pinecones with a common root.

    The result is always a pinecone but need not be closed; take its core for
    the largest closed pinecone contained in both.
    """
    if p.root != q.root:
        raise InvalidArgument("intersection requires pinecones with the same root")
    if p.is_empty or q.is_empty:
        return Pinecone(root=p.root)
    lp, lq = p.segments, q.segments
    lengths = tuple((h, min(lp[h], lq[h])) for h in sorted(lp.keys() & lq.keys()))
    shape = Pinecone(lengths, root=p.root)
    odd = frozenset(
        v for v in p.odd_edges & q.odd_edges
        if v.y in shape.rows and v.x <= shape.row_boundary(v.y)
    )
    return Pinecone(lengths, odd, p.root)


def closed_pinecones(max_width: int) -> Iterator[Pinecone]:
    """Every nonempty closed standard pinecone of width at most ``max_width``."""

    def chains(r: int, step: int, limit: int) -> Iterator[list[tuple[int, int]]]:
        # Rows r, r+step, ...: each nonempty row's rightmost square is left of the previous one.
        yield []
        cells = [x for x in range(abs(r), limit) if (x + r) % 2 == 0]
        for rightmost in cells:
            left = [x for x in cells if x < rightmost]
            for subset in _subsets(left):
                row = [(x, r) for x in subset] + [(rightmost, r)]
                for rest in chains(r + step, step, rightmost):
                    yield row + rest

    for width in range(1, max_width + 1, 2):
        row0 = [x for x in range(0, width - 1, 2)]
        for subset in _subsets(row0):
            base = [(x, 0) for x in subset] + [(width - 1, 0)]
            for up in chains(1, 1, width - 1):
                for down in chains(-1, -1, width - 1):
                    yield from_black_squares(base + up + down)


def _subsets(items: list[int]) -> Iterator[tuple[int, ...]]:
    for mask in range(1 << len(items)):
        yield tuple(x for b, x in enumerate(items) if mask >> b & 1)
