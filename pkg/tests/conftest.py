from __future__ import annotations

import random
from functools import lru_cache
from pathlib import Path

import pytest

from pinecones.grid import GridGraph, Vertex
from pinecones.pinecone import Pinecone, from_black_squares

DATA = Path(__file__).parent / "data"


def brute_count(g: GridGraph) -> int:
    """Perfect matchings by memoized recursion on the set of uncovered vertices.

    Deliberately shares no code with the library's counters.
    """
    order = sorted(g.vertices, key=lambda v: (v.x, v.y))
    index = {v: t for t, v in enumerate(order)}
    adj = [0] * len(order)
    for e in g.edges:
        a, b = index[e.a], index[e.b]
        adj[a] |= 1 << b
        adj[b] |= 1 << a

    @lru_cache(maxsize=None)
    def go(free: int) -> int:
        if not free:
            return 1
        low = (free & -free).bit_length() - 1
        rest = free & ~(1 << low)
        options = adj[low] & rest
        total = 0
        while options:
            bit = options & -options
            total += go(rest & ~bit)
            options ^= bit
        return total

    return go((1 << len(order)) - 1)


def random_pinecone(rng: random.Random, max_width: int = 11, density: float | None = None) -> Pinecone:
    """A general (not necessarily closed) standard pinecone."""
    width = rng.randrange(1, max_width + 1, 2)
    lengths = {0: width, 1: width}
    h, length = 2, width
    while length > 1 and rng.random() < 0.75:
        length = rng.randrange(1, length, 2)
        lengths[h] = length
        h += 1
    h, length = -1, width
    while length > 1 and rng.random() < 0.75:
        length = rng.randrange(1, length, 2)
        lengths[h] = length
        h -= 1
    shape = Pinecone(tuple(lengths.items()))
    p_odd = rng.uniform(0.2, 0.9) if density is None else density
    odd = [
        (u, r)
        for r in shape.rows
        for u in range(abs(r), shape.row_boundary(r) + 1)
        if (u + r) % 2 and rng.random() < p_odd
    ]
    return Pinecone(shape.lengths, frozenset(odd))


def random_closed(rng: random.Random, max_width: int = 11) -> Pinecone:
    """A nonempty closed standard pinecone from a random monotone black-square set."""
    width = rng.randrange(1, max_width + 1, 2)
    squares = [(width - 1, 0)] + [(x, 0) for x in range(0, width - 1, 2) if rng.random() < 0.5]
    for step in (1, -1):
        limit, r = width - 1, step
        while rng.random() < 0.8:
            cells = [x for x in range(abs(r), limit) if (x + r) % 2 == 0]
            if not cells:
                break
            right = rng.choice(cells)
            squares.append((right, r))
            squares += [(x, r) for x in cells if x < right and rng.random() < 0.5]
            limit, r = right, r + step
    return from_black_squares(squares)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240611)


@pytest.fixture
def figure_vax_text() -> str:
    return (DATA / "p25_6253.vax").read_text(encoding="latin-1")


def vertex_set(*pts) -> frozenset[Vertex]:
    return frozenset(Vertex(*p) for p in pts)


# -- acceptance report ------------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    number, title = marker.args
    if report.passed:
        status = "PASS"
    elif hasattr(report, "wasxfail"):
        status = "FAIL (expected: " + report.wasxfail + ")"
    elif report.skipped:
        status = "SKIP"
    else:
        status = "FAIL"
    _CRITERIA[number] = (title, status, report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, status, seconds = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} {status.split()[0]:4s} {title} [{seconds:.1f} s]"
                                    + (status[4:] if status.startswith("FAIL (") else ""))
