"""Uniform random perfect matchings and SVG rendering of domino tilings.

Sampling is sequential: take the first uncovered vertex in the counting
sweep's order, match it to one of its forward neighbours with probability
proportional to the number of perfect matchings of what remains.  Every matching then has probability
exactly 1/m(G).

Randomness comes from the PCG64 generator (numpy's ``PCG64``, seeded with
``SeedSequence(seed)``).  Uniform integers below ``n`` are drawn by taking
``ceil(bits(n) / 64)`` raw 64-bit outputs, little-endian, masking to
``bits(n)`` bits and rejecting values ``>= n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .errors import GuardrailExceeded, InvalidArgument, NoPerfectMatching
from .grid import Edge, GridGraph
from .matching import Matching, _plan

__all__ = [
    "SamplerConfig",
    "MatchingSampler",
    "TilingImage",
    "sample_matching",
    "matching_probability",
    "render_tiling",
    "BigRandom",
]


@dataclass(frozen=True)
class SamplerConfig:
    seed: int = 0
    max_count_guardrail: int = 10**200

    def __post_init__(self) -> None:
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise InvalidArgument(f"seed must be an unsigned 64-bit integer, got {self.seed!r}")


class BigRandom:
    """Arbitrary-precision uniform integers on top of PCG64."""

    def __init__(self, seed: int):
        self._bits = np.random.PCG64(np.random.SeedSequence(seed))

    def word(self) -> int:
        return int(self._bits.random_raw())

    def randbelow(self, n: int) -> int:
        if n <= 0:
            raise InvalidArgument("randbelow needs a positive bound")
        k = n.bit_length()
        words = -(-k // 64)
        mask = (1 << k) - 1
        while True:
            value = 0
            for t in range(words):
                value |= self.word() << (64 * t)
            value &= mask
            if value < n:
                return value


class MatchingSampler:
    """Sequential sampler over one graph.

    Vertices are visited in the counting sweep's order with the same
    covered-vertex masks.  A backward pass stores, for every reachable mask, the
    number of ways to finish the matching; these are exactly the matching
    counts of the remaining subgraphs.
    """

    def __init__(self, graph: GridGraph):
        self.graph = graph
        self._plan = _plan(graph)
        reach: list[set[int]] = [{0}]
        for forward in self._plan:
            nxt: set[int] = set()
            for state in reach[-1]:
                for _, new in self._moves(forward, state):
                    nxt.add(new)
            reach.append(nxt)
        counts: list[dict[int, int]] = [dict() for _ in reach]
        counts[-1] = {0: 1} if 0 in reach[-1] else {}
        for t in range(len(self._plan) - 1, -1, -1):
            forward = self._plan[t]
            after = counts[t + 1]
            counts[t] = {
                state: sum(after.get(new, 0) for _, new in self._moves(forward, state))
                for state in reach[t]
            }
        self._counts = counts

    @staticmethod
    def _moves(forward, state) -> list[tuple[Edge | None, int]]:
        if state & 1:
            return [(None, state >> 1)]
        return [(e, (state | 1 << d) >> 1) for e, d in forward if not state >> d & 1]

    @property
    def total(self) -> int:
        return self._counts[0].get(0, 0)

    def _walk(self, decide) -> list[Edge]:
        state, chosen = 0, []
        for t, forward in enumerate(self._plan):
            moves = [
                (e, new, self._counts[t + 1].get(new, 0))
                for e, new in self._moves(forward, state)
            ]
            moves = [mv for mv in moves if mv[2]]
            if moves[0][0] is None:
                state = moves[0][1]
                continue
            e, state = decide(moves)
            chosen.append(e)
        return chosen

    def sample(self, cfg: SamplerConfig) -> Matching:
        total = self.total
        if total == 0:
            raise NoPerfectMatching("the graph has no perfect matching")
        if total > cfg.max_count_guardrail:
            raise GuardrailExceeded(f"graph has {total} matchings, above the sampler guardrail")
        rng = BigRandom(cfg.seed)

        def decide(moves):
            r = rng.randbelow(sum(c for _, _, c in moves))
            for e, new, c in moves:
                if r < c:
                    return e, new
                r -= c
            raise AssertionError("unreachable")

        return Matching(frozenset(self._walk(decide)))

    def probability(self, m: Matching) -> Fraction:
        """Exact probability that :meth:`sample` returns ``m``."""
        if not m.is_perfect_matching_of(self.graph):
            raise InvalidArgument("not a perfect matching of the graph")
        prob = [Fraction(1)]

        def decide(moves):
            total = sum(c for _, _, c in moves)
            for e, new, c in moves:
                if e in m.edges:
                    prob[0] *= Fraction(c, total)
                    return e, new
            raise InvalidArgument("matching leaves the sampler's support")

        self._walk(decide)
        return prob[0]


def sample_matching(g: GridGraph, cfg: SamplerConfig) -> Matching:
    return MatchingSampler(g).sample(cfg)


def matching_probability(g: GridGraph, m: Matching) -> Fraction:
    return MatchingSampler(g).probability(m)


@dataclass(frozen=True)
class TilingImage:
    svg_text: str
    width: int
    height: int

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(self.svg_text)


HORIZONTAL_FILL = "#d9534f"
VERTICAL_FILL = "#428bca"


def render_tiling(g: GridGraph, m: Matching, scale: int = 12) -> TilingImage:
    """Dual domino tiling of a perfect matching: one rectangle per matched edge."""
    if not m.is_perfect_matching_of(g):
        raise InvalidArgument("not a perfect matching of the graph")
    if g.is_empty:
        return TilingImage('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="0" height="0"/>\n', 0, 0)
    x0 = min(v.x for v in g.vertices)
    y1 = max(v.y for v in g.vertices)
    width = (max(v.x for v in g.vertices) - x0 + 1) * scale
    height = (y1 - min(v.y for v in g.vertices) + 1) * scale
    rects = []
    for e in m.sorted_edges():
        # Each vertex owns the unit square centred on it; flip y for screen coordinates.
        left = (e.a.x - x0) * scale
        top = (y1 - e.b.y) * scale
        w = (e.b.x - e.a.x + 1) * scale
        h = (e.b.y - e.a.y + 1) * scale
        fill = HORIZONTAL_FILL if e.horizontal else VERTICAL_FILL
        rects.append(
            f'  <rect x="{left}" y="{top}" width="{w}" height="{h}" '
            f'fill="{fill}" stroke="#000000" stroke-width="1"/>'
        )
    svg = "\n".join([
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        *rects,
        "</svg>",
        "",
    ])
    return TilingImage(svg, width, height)
