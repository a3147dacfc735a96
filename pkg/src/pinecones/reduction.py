"""Cores and the five condensation sub-pinecones.

The core of a pinecone is read off its black squares: pick the rightmost
square of row 0, then in each row above (below) the rightmost square strictly
left of the previous pick, and keep every square weakly left of a pick.  The
sub-pinecones of a closed pinecone are cores of the same kind, restricted to a
shifted wedge and, for the west and center ones, to row-0 squares left of the
rightmost one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import InternalInvariantViolation, InvalidArgument, PreconditionViolation
from .grid import Vertex
from .pinecone import Pinecone, _closed_by_faces, from_black_squares, to_grid_graph

__all__ = ["SubPineconeSet", "core", "peel", "sub_pinecones", "reconstruct"]


@dataclass(frozen=True)
class SubPineconeSet:
    north: Pinecone
    south: Pinecone
    west: Pinecone
    east: Pinecone
    center: Pinecone

    def __iter__(self) -> Iterator[Pinecone]:
        return iter((self.north, self.south, self.west, self.east, self.center))

    def items(self) -> list[tuple[str, Pinecone]]:
        return list(zip(("north", "south", "west", "east", "center"), self))


def _largest_closed(
    rows: Mapping[int, list[int]], root: tuple[int, int], bound0: int | None = None
) -> Pinecone:
    """Largest closed pinecone rooted at ``root`` using the given black squares.

    ``rows`` maps absolute rows to sorted abscissas.  Squares of row 0 (relative
    to ``root``) lying right of ``bound0`` are ignored.
    """
    tx, ty = root

    def pick(s: int, limit: int | None) -> int | None:
        best = None
        for x in rows.get(ty + s, ()):
            if x < tx + abs(s):
                continue
            if limit is not None and not x < limit:
                break
            best = x
        return best

    top = pick(0, None if bound0 is None else bound0 + 1)
    if top is None:
        return Pinecone(root=Vertex(tx, ty))
    picks = {0: top}
    for step in (1, -1):
        s, prev = step, top
        while (b := pick(s, prev)) is not None:
            picks[s] = prev = b
            s += step
    squares = [
        (x, ty + s)
        for s, b in picks.items()
        for x in rows.get(ty + s, ())
        if tx + abs(s) <= x <= b
    ]
    return from_black_squares(squares, (tx, ty))


def core(p: Pinecone) -> Pinecone:
    """The largest closed sub-pinecone of ``p`` (same root)."""
    return _largest_closed(p.squares_by_row(), p.root)


def peel(p: Pinecone) -> Pinecone:
    """Remove one diagonal chain of forced and forbidden vertices.

    Starts from the rightmost degree-1 vertex; the matching number is unchanged.
    """
    g = to_grid_graph(p.standard())
    ones = g.degree_one_vertices()
    if not ones:
        raise PreconditionViolation("peel requires a pinecone that is not closed")
    a, b = max(ones)
    if b > 1:
        chains = [(1, b)]
    elif b < 0:
        chains = [(-1, b)]
    else:
        chains = [(1, 1), (-1, 0)]
    lengths = p.segments
    for step, start in chains:
        j = 0
        while True:
            h = start + step * j
            x = a - j
            if h not in lengths or lengths[h] <= 0:
                break
            end = (h - 1 if h >= 1 else -h) + lengths[h]
            if x > end:
                break
            if x != end:
                raise InternalInvariantViolation(f"chain vertex ({x},{h}) is not a segment end")
            lengths[h] -= 2
            j += 1
    kept = tuple((h, n) for h, n in sorted(lengths.items()) if n > 0)
    if kept and not {0, 1} <= {h for h, _ in kept}:
        kept = ()
    if not kept:
        return Pinecone(root=p.root)
    shape = Pinecone(kept, root=p.root)
    odd = frozenset(
        v for v in p.odd_edges if v.y in shape.rows and v.x <= shape.row_boundary(v.y)
    )
    return Pinecone(kept, odd, p.root)


def sub_pinecones(p: Pinecone) -> SubPineconeSet:
    """North, south, west, east and center sub-pinecones of a closed pinecone."""
    if p.is_empty:
        raise PreconditionViolation("sub-pinecones of the empty pinecone are undefined")
    if not _closed_by_faces(p):
        raise PreconditionViolation("sub-pinecones require a closed pinecone")
    rows = p.squares_by_row()
    tx, ty = p.root
    row0 = rows.get(ty, [])
    # r'_0: the second black square from the right in row 0, if any.
    second = row0[-2] if len(row0) >= 2 else None

    def bounded(root: tuple[int, int]) -> Pinecone:
        if second is None:
            return Pinecone(root=Vertex(*root))
        return _largest_closed(rows, root, second)

    return SubPineconeSet(
        north=_largest_closed(rows, (tx + 1, ty + 1)),
        south=_largest_closed(rows, (tx + 1, ty - 1)),
        west=bounded((tx, ty)),
        east=_largest_closed(rows, (tx + 2, ty)),
        center=bounded((tx + 2, ty)),
    )


def reconstruct(sub: SubPineconeSet) -> Pinecone:
    """Rebuild a closed pinecone from its north, south, west and east sub-pinecones."""
    root = sub.west.root
    tx, ty = root
    if (sub.north.root, sub.south.root, sub.east.root) != (
        (tx + 1, ty + 1), (tx + 1, ty - 1), (tx + 2, ty)
    ):
        raise InvalidArgument("sub-pinecone roots are inconsistent")
    if all(q.is_empty for q in (sub.north, sub.south, sub.west, sub.east)):
        raise InvalidArgument("cannot reconstruct from empty sub-pinecones")
    # The 2-by-1 rectangle at the root only fixes the extent of row 0, which
    # the standard frame already provides; it adds no black square.
    squares = {c for c in sub.north.squares() if c.y > ty}
    squares |= {c for c in sub.south.squares() if c.y < ty}
    squares |= {c for c in sub.west.squares() | sub.east.squares() if c.y == ty}
    return from_black_squares(squares, root)
