"""Condensation identities for diamonds and closed pinecones.

All identities are checked as exact equalities of edge polynomials.  The
refined pinecone identity reads

    M(P) M(P^C) = E1 M(P^W) M(P^E) + E2 H^- H^+ M(P^N) M(P^S)

where E1, E2, H^- and H^+ are monomials in horizontal edges (plus the two
extreme vertical edges of row 0 in E2), computed by
:func:`condensation_monomials`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import GuardrailExceeded, InternalInvariantViolation, PreconditionViolation
from .grid import Edge, GridGraph, Vertex, diamond_graph, graph_difference
from .matching import bivariate_count, count_matchings, iter_matchings, matching_polynomial
from .pinecone import Pinecone, _closed_by_faces, is_interleaved, to_grid_graph
from .polynomials import BivariatePoly, MatchingPolynomial, monomial_code
from .reduction import SubPineconeSet, sub_pinecones

__all__ = [
    "EdgeKind",
    "EdgeClassification",
    "CondensationMonomials",
    "verify_kuo",
    "classify_horizontal_edges",
    "condensation_monomials",
    "verify_condensation_full",
    "verify_condensation_interleaved",
    "check_stable_ordinary_edges",
    "partial_matching_polynomial",
    "pinecone_polynomial",
    "bivariate_q",
    "bivariate_q_enumerated",
    "condensation_work",
    "DEFAULT_WORK_BUDGET",
]

# Largest number of monomial pair products a single identity check may cost.
DEFAULT_WORK_BUDGET = 10**7


def _check_identity(lhs: list[tuple[MatchingPolynomial, MatchingPolynomial]],
                    rhs: list[tuple[int, MatchingPolynomial, MatchingPolynomial]]) -> bool:
    """Compare sum of products on each side; rhs terms carry a monomial factor."""
    left = Counter()
    for a, b in lhs:
        for k1, v1 in a.terms.items():
            for k2, v2 in b.terms.items():
                left[k1 + k2] += v1 * v2
    right = Counter()
    for code, a, b in rhs:
        for k1, v1 in a.terms.items():
            base = k1 + code
            for k2, v2 in b.terms.items():
                right[base + k2] += v1 * v2
    left = {k: v for k, v in left.items() if v}
    right = {k: v for k, v in right.items() if v}
    return left == right


# -- diamonds -------------------------------------------------------------------


def verify_kuo(width: int) -> bool:
    """M(A) M(A_C) = ns M(A_W) M(A_E) + ew M(A_N) M(A_S) for the diamond of this width."""
    if width < 5:
        raise PreconditionViolation(f"Kuo condensation needs width >= 5, got {width}")
    A = diamond_graph(width)
    n = (width - 1) // 2
    small = diamond_graph(width - 2)
    A_N, A_S = small.translate(1, 1), small.translate(1, -1)
    A_W, A_E = small, small.translate(2, 0)
    A_C = diamond_graph(width - 4).translate(2, 0)
    north = Edge.horizontal_at(n, n + 1)
    south = Edge.horizontal_at(n, -n)
    west = Edge.vertical_at(0, 0)
    east = Edge.vertical_at(2 * n + 1, 0)
    M = matching_polynomial
    return _check_identity(
        [(M(A), M(A_C))],
        [
            (monomial_code([north, south]), M(A_W), M(A_E)),
            (monomial_code([east, west]), M(A_N), M(A_S)),
        ],
    )


# -- ordinary and special edges -------------------------------------------------


class EdgeKind(Enum):
    ORDINARY = "ordinary"
    SPECIAL = "special"


@dataclass(frozen=True)
class EdgeClassification:
    kinds: Mapping[Edge, EdgeKind]
    left_edges: frozenset[Edge]

    @property
    def ordinary(self) -> frozenset[Edge]:
        return frozenset(e for e, k in self.kinds.items() if k is EdgeKind.ORDINARY)

    @property
    def special(self) -> frozenset[Edge]:
        return frozenset(e for e, k in self.kinds.items() if k is EdgeKind.SPECIAL)


def classify_horizontal_edges(p: Pinecone) -> EdgeClassification:
    """Ordinary/special status of every horizontal edge of a closed pinecone.

    For an edge at ordinate h with leftmost abscissa x, look at the black
    squares of rows h-1 and h whose abscissa is at least x; the nearest one
    decides.  An even edge is ordinary when it is in row h-1, an odd edge
    when it is in row h.  Parities guarantee there is never a tie.
    """
    if not _closed_by_faces(p):
        raise PreconditionViolation("edge classification requires a closed pinecone")
    return _classify(p)


@lru_cache(maxsize=4096)
def _classify(p: Pinecone) -> EdgeClassification:
    rows: dict[int, list[int]] = {}
    for u, r in p.odd_edges:
        rows.setdefault(r, []).append(u - 1)
    tx, ty = p.root
    kinds: dict[Edge, EdgeKind] = {}
    left: set[Edge] = set()
    for h in p.ordinates:
        start, end = p.segment(h)
        below, above = rows.get(h - 1, ()), rows.get(h, ())
        for x in range(start, end):
            near_below = min((c for c in below if c >= x), default=None)
            near_above = min((c for c in above if c >= x), default=None)
            if near_below is None and near_above is None:
                raise InternalInvariantViolation(f"no black square right of edge at ({x},{h})")
            in_below = near_above is None or (near_below is not None and near_below < near_above)
            even = (x + h) % 2 == 0
            ordinary = in_below if even else not in_below
            e = Edge.horizontal_at(x + tx, h + ty)
            kinds[e] = EdgeKind.ORDINARY if ordinary else EdgeKind.SPECIAL
            if x == start:
                left.add(e)
    return EdgeClassification(kinds, frozenset(left))


def check_stable_ordinary_edges(p: Pinecone, sub: SubPineconeSet | None = None) -> bool:
    """Each sub-pinecone's ordinary edges are those of ``p`` that it contains."""
    sub = sub or sub_pinecones(p)
    ordinary = classify_horizontal_edges(p).ordinary
    for q in sub:
        if q.is_empty:
            continue
        edges = to_grid_graph(q).edges
        if classify_horizontal_edges(q).ordinary != ordinary & edges:
            return False
    return True


# -- refined condensation -------------------------------------------------------


@dataclass(frozen=True)
class CondensationMonomials:
    e1_product: Mapping[Edge, int]
    e2_product: Mapping[Edge, int]
    h_minus: Mapping[Edge, int]
    h_plus: Mapping[Edge, int]

    def first_term(self) -> int:
        return _code(self.e1_product)

    def second_term(self) -> int:
        return _code(self.e2_product) + _code(self.h_minus) + _code(self.h_plus)


def _code(mono: Mapping[Edge, int]) -> int:
    return sum(monomial_code([e]) * x for e, x in mono.items())


def _horizontal_matching(g: GridGraph) -> list[Edge]:
    """The unique all-horizontal perfect matching, by greedy pairing along each ordinate."""
    out = []
    for y, xs in g.rows().items():
        if len(xs) % 2:
            raise InternalInvariantViolation(f"odd number of vertices at ordinate {y}")
        for a, b in zip(xs[::2], xs[1::2]):
            e = Edge.horizontal_at(a, y)
            if b != a + 1 or e not in g.edges:
                raise InternalInvariantViolation(f"no horizontal edge pairs ({a},{y}) at ordinate {y}")
            out.append(e)
    return out


def _rows_graph(q: Pinecone, keep) -> GridGraph:
    return q.rows_graph([r for r in q.rows if keep(r)])


def condensation_monomials(p: Pinecone, sub: SubPineconeSet | None = None) -> CondensationMonomials:
    if p.is_empty:
        raise PreconditionViolation("condensation needs a nonempty pinecone")
    if not _closed_by_faces(p):
        raise PreconditionViolation("condensation needs a closed pinecone")
    sub = sub or sub_pinecones(p)
    tx, ty = p.root
    west_edges = to_grid_graph(sub.west).edges
    e1 = {e: 1 for e in p.left_edges() if e not in west_edges}

    e2: dict[Edge, int] = {
        Edge.vertical_at(tx, ty): 1,
        Edge.vertical_at(tx + p.width, ty): 1,
    }
    north_edges = to_grid_graph(sub.north).edges
    south_edges = to_grid_graph(sub.south).edges
    for e in p.horizontal_edges(1):
        if e.even and e not in north_edges:
            e2[e] = 1
    for e in p.horizontal_edges(0):
        if not e.even and e not in south_edges:
            e2[e] = 1

    minus = graph_difference(
        _rows_graph(sub.center, lambda r: r <= 0) if not sub.center.is_empty else GridGraph(),
        _rows_graph(sub.north, lambda r: r < 0) if not sub.north.is_empty else GridGraph(),
    )
    plus = graph_difference(
        _rows_graph(sub.center, lambda r: r >= 0) if not sub.center.is_empty else GridGraph(),
        _rows_graph(sub.south, lambda r: r > 0) if not sub.south.is_empty else GridGraph(),
    )
    h_minus = {e: 1 for e in _horizontal_matching(minus) if e.a.y <= ty}
    h_plus = {e: 1 for e in _horizontal_matching(plus) if e.a.y > ty}
    return CondensationMonomials(e1, e2, h_minus, h_plus)


def pinecone_polynomial(p: Pinecone) -> MatchingPolynomial:
    return matching_polynomial(to_grid_graph(p))


def condensation_work(p: Pinecone, sub: SubPineconeSet | None = None) -> int:
    """Number of monomial pair products needed to check the identity for ``p``."""
    sub = sub or sub_pinecones(p)
    m = lambda q: count_matchings(to_grid_graph(q))  # noqa: E731
    return m(p) * m(sub.center) + m(sub.west) * m(sub.east) + m(sub.north) * m(sub.south)


def verify_condensation_full(p: Pinecone, budget: int | None = DEFAULT_WORK_BUDGET) -> bool:
    """The refined condensation identity for a closed nonempty pinecone, exactly.

    Also asserts that ordinary edges are stable under taking sub-pinecones.
    Raises :class:`GuardrailExceeded` when the expansion would exceed ``budget``.
    """
    sub = sub_pinecones(p)
    if budget is not None:
        work = condensation_work(p, sub)
        if work > budget:
            raise GuardrailExceeded(f"condensation check needs {work} products, budget is {budget}")
    mono = condensation_monomials(p, sub)
    if not check_stable_ordinary_edges(p, sub):
        raise InternalInvariantViolation(f"ordinary edges are not stable for {p}")
    M = pinecone_polynomial
    return _check_identity(
        [(M(p), M(sub.center))],
        [
            (mono.first_term(), M(sub.west), M(sub.east)),
            (mono.second_term(), M(sub.north), M(sub.south)),
        ],
    )


def partial_matching_polynomial(p: Pinecone) -> MatchingPolynomial:
    """Matching polynomial with every ordinary horizontal edge set to 1."""
    cls = classify_horizontal_edges(p)
    if p.is_empty:
        return MatchingPolynomial.one()
    return pinecone_polynomial(p).substitute_ones(cls.ordinary)


def verify_condensation_interleaved(p: Pinecone, budget: int | None = DEFAULT_WORK_BUDGET) -> bool:
    """Partial polynomials: M~(P) M~(P^C) = a a' M~(P^W) M~(P^E) + e w M~(P^N) M~(P^S)."""
    if not is_interleaved(p):
        raise PreconditionViolation("pinecone is not interleaved")
    sub = sub_pinecones(p)
    if budget is not None and condensation_work(p, sub) > budget:
        raise GuardrailExceeded("interleaved condensation check exceeds the work budget")
    tx, ty = p.root
    lefts = p.left_edges()
    highest, lowest = lefts[-1], lefts[0]
    ew = [Edge.vertical_at(tx, ty), Edge.vertical_at(tx + p.width, ty)]
    Mt = partial_matching_polynomial
    return _check_identity(
        [(Mt(p), Mt(sub.center))],
        [
            (monomial_code([highest, lowest]), Mt(sub.west), Mt(sub.east)),
            (monomial_code(ew), Mt(sub.north), Mt(sub.south)),
        ],
    )


# -- bivariate refinement -------------------------------------------------------


def bivariate_q(p: Pinecone) -> BivariatePoly:
    """Matchings of a closed pinecone by (special horizontal edges, vertical edges)."""
    if p.is_empty:
        return BivariatePoly.constant(1)
    special = classify_horizontal_edges(p).special
    return bivariate_count(to_grid_graph(p), special)


def bivariate_q_enumerated(p: Pinecone) -> BivariatePoly:
    """Same as :func:`bivariate_q`, by listing matchings (small pinecones only)."""
    if p.is_empty:
        return BivariatePoly.constant(1)
    special = classify_horizontal_edges(p).special
    coeffs: Counter = Counter()
    for m in iter_matchings(to_grid_graph(p)):
        a = sum(1 for e in m.edges if e in special)
        b = sum(1 for e in m.edges if e.vertical)
        coeffs[a, b] += 1
    return BivariatePoly(coeffs)
