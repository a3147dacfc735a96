"""Perfect matchings of grid graphs: enumeration, counting, polynomials.

Counting sweeps the vertices line by line (rows, columns or diagonals,
whichever keeps the frontier narrowest), remembering which of the next
vertices are already covered; an uncovered vertex is paired with one of its
later neighbours.  The same sweep runs over several coefficient algebras
(plain counts, packed bivariate polynomials, edge polynomials), so every
invariant comes from one kernel, cross-checked against the enumerator.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Sequence

from .errors import GuardrailExceeded
from .grid import Edge, GridGraph, Vertex, vertex_key
from .polynomials import BivariatePoly, MatchingPolynomial, edge_code, poly_product

__all__ = [
    "Matching",
    "ENUMERATION_LIMIT",
    "enumerate_matchings",
    "iter_matchings",
    "count_matchings",
    "matching_polynomial",
    "poly_product",
    "weighted_count",
    "bivariate_count",
    "enumerated_polynomial",
]

ENUMERATION_LIMIT = 10**7


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __post_init__(self) -> None:
        object.__setattr__(self, "edges", frozenset(self.edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges, key=lambda e: (vertex_key(e.a), vertex_key(e.b)))

    def is_perfect_matching_of(self, g: GridGraph) -> bool:
        if not self.edges <= g.edges:
            return False
        covered = [v for e in self.edges for v in e]
        return len(covered) == len(set(covered)) and set(covered) == set(g.vertices)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.sorted_edges())


# -- profile sweep ---------------------------------------------------------------


_ORDERS = (
    lambda v: (v.y, v.x),  # rows
    lambda v: (v.x, v.y),  # columns
    lambda v: (v.x + v.y, v.x),  # diagonals
    lambda v: (v.x - v.y, v.x),  # anti-diagonals
)


def _plan(g: GridGraph) -> list[tuple[tuple[Edge, int], ...]]:
    """Sweep order and, per vertex, its edges to later vertices with index offsets.

    Of the row, column and two diagonal orders, the one with the smallest
    largest offset (the frontier width) wins; ties go to the earlier order.
    """
    best = None
    for key in _ORDERS:
        order = sorted(g.vertices, key=key)
        index = {v: t for t, v in enumerate(order)}
        width = max(
            (abs(index[e.a] - index[e.b]) for e in g.edges), default=0
        )
        if best is None or width < best[0]:
            best = (width, order, index)
    _, order, index = best
    plan = []
    for t, v in enumerate(order):
        forward = []
        for w in g.neighbors(v):
            if index[w] > t:
                forward.append((Edge.between(v, w), index[w] - t))
        plan.append(tuple(sorted(forward, key=lambda f: f[1])))
    return plan


def _sweep(g: GridGraph, weight: Callable[[object, Edge], object], one: object, add: Callable) -> object:
    """Sum over perfect matchings of the product of edge weights.

    Vertices are visited in the order of :func:`_plan`.  The state is a bit
    mask of the vertices at and after the current one that are already
    covered; an uncovered current vertex is matched to a later neighbour.
    ``weight(value, edge)`` multiplies a partial sum by one edge weight and
    ``add(a, b)`` may reuse ``a``.  Returns ``None`` without a perfect matching.
    """
    states: dict[int, object] = {0: one}
    for forward in _plan(g):
        nxt: dict[int, object] = {}

        def put(key: int, val: object) -> None:
            prev = nxt.get(key)
            nxt[key] = val if prev is None else add(prev, val)

        for state, val in states.items():
            if state & 1:
                put(state >> 1, val)
                continue
            for e, offset in forward:
                bit = 1 << offset
                if not state & bit:
                    put((state | bit) >> 1, weight(val, e))
        states = nxt
        if not states:
            return None
    return states.get(0)


def count_matchings(g: GridGraph) -> int:
    """Number of perfect matchings, by the profile sweep."""
    return _count(g)


@lru_cache(maxsize=1024)
def _count(g: GridGraph) -> int:
    if len(g.vertices) % 2:
        return 0
    result = _sweep(g, lambda v, e: v, 1, lambda a, b: a + b)
    return result or 0


def weighted_count(g: GridGraph, weights: Callable[[Edge], int]) -> int:
    """Sum over perfect matchings of the product of integer edge weights."""
    def weight(v: int, e: Edge) -> int:
        return v * weights(e)
    return _sweep(g, weight, 1, lambda a, b: a + b) or 0


def bivariate_count(g: GridGraph, marked: Iterable[Edge], names: tuple[str, str] = ("u", "v")) -> BivariatePoly:
    """Matchings counted by (number of ``marked`` horizontal edges, number of vertical edges).

    Both exponents are packed into one integer (Kronecker substitution); the
    sum over matchings is then a plain integer sweep.  The packing is a ring
    homomorphism, so intermediate carries do not matter and the final value
    decodes uniquely because its coefficients are below ``2**B``.
    """
    total = count_matchings(g)
    if total == 0:
        return BivariatePoly({}, names)
    marked = frozenset(marked)
    span = len(g.vertices) // 2 + 1  # bound on either exponent
    bits = -(-(total.bit_length() + 1) // 8) * 8
    shift_u, shift_v = bits, bits * span

    def weight(v: int, e: Edge) -> int:
        if e.vertical:
            return v << shift_v
        return v << shift_u if e in marked else v

    packed = _sweep(g, weight, 1, lambda a, b: a + b) or 0
    coeffs: dict[tuple[int, int], int] = {}
    raw = packed.to_bytes((packed.bit_length() + 7) // 8 or 1, "little")
    step = bits // 8
    for pos in range(0, len(raw), step):
        c = int.from_bytes(raw[pos:pos + step], "little")
        if c:
            key = pos // step
            coeffs[key % span, key // span] = c
    return BivariatePoly(coeffs, names)


def matching_polynomial(g: GridGraph) -> MatchingPolynomial:
    """Sum over perfect matchings of the product of their edges."""
    return _polynomial(g)


@lru_cache(maxsize=256)
def _polynomial(g: GridGraph) -> MatchingPolynomial:
    if len(g.vertices) % 2:
        return MatchingPolynomial()

    def weight(v: dict, e: Edge) -> dict:
        code = edge_code(e)
        return {k + code: c for k, c in v.items()}

    def add(a: dict, b: dict) -> dict:
        for k, c in b.items():
            a[k] = a.get(k, 0) + c
        return a

    return MatchingPolynomial(_sweep(g, weight, {0: 1}, add) or {})


# -- enumeration ----------------------------------------------------------------


def iter_matchings(g: GridGraph) -> Iterator[Matching]:
    """Perfect matchings in a fixed order: branch on the lowest uncovered vertex."""
    if len(g.vertices) % 2:
        return
    order: Sequence[Vertex] = g.sorted_vertices()
    vertices = g.vertices
    edges = g.edges
    covered: set[Vertex] = set()
    chosen: list[Edge] = []

    def go(idx: int) -> Iterator[Matching]:
        while idx < len(order) and order[idx] in covered:
            idx += 1
        if idx == len(order):
            yield Matching(frozenset(chosen))
            return
        v = order[idx]
        # Lower and left neighbours are already covered; only right and up remain.
        for w in (Vertex(v.x + 1, v.y), Vertex(v.x, v.y + 1)):
            if w in vertices and w not in covered and Edge.between(v, w) in edges:
                covered.update((v, w))
                chosen.append(Edge.between(v, w))
                yield from go(idx + 1)
                chosen.pop()
                covered.difference_update((v, w))

    yield from go(0)


def enumerate_matchings(g: GridGraph, limit: int = ENUMERATION_LIMIT) -> list[Matching]:
    """All perfect matchings; refuses graphs with more than ``limit`` of them."""
    total = count_matchings(g)
    if total > limit:
        raise GuardrailExceeded(f"graph has {total} perfect matchings; enumeration limit is {limit}")
    return list(iter_matchings(g))


def enumerated_polynomial(g: GridGraph) -> MatchingPolynomial:
    """Matching polynomial built from explicit enumeration (cross-check path)."""
    terms: dict[int, int] = {}
    for m in iter_matchings(g):
        code = sum(edge_code(e) for e in m.edges)
        terms[code] = terms.get(code, 0) + 1
    return MatchingPolynomial(terms)
