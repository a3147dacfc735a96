from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from scipy.stats import chisquare

from pinecones.errors import GuardrailExceeded, InvalidArgument, NoPerfectMatching
from pinecones.galerobinson import build_direct
from pinecones.grid import Edge, GridGraph, Vertex, diamond_graph
from pinecones.matching import Matching, count_matchings, enumerate_matchings, iter_matchings
from pinecones.pinecone import to_grid_graph
from pinecones.sampler import (
    BigRandom,
    MatchingSampler,
    SamplerConfig,
    matching_probability,
    render_tiling,
    sample_matching,
)

from conftest import random_closed


def test_config_validation():
    with pytest.raises(InvalidArgument):
        SamplerConfig(seed=-1)
    with pytest.raises(InvalidArgument):
        SamplerConfig(seed=2**64)
    SamplerConfig(seed=2**64 - 1)


def test_big_random_is_pcg64():
    rng = BigRandom(42)
    ref = np.random.PCG64(np.random.SeedSequence(42))
    assert [rng.word() for _ in range(5)] == [int(ref.random_raw()) for _ in range(5)]


def test_randbelow_range_and_determinism():
    a, b = BigRandom(7), BigRandom(7)
    draws = [a.randbelow(10**30) for _ in range(200)]
    assert draws == [b.randbelow(10**30) for _ in range(200)]
    assert all(0 <= d < 10**30 for d in draws)
    assert {BigRandom(s).randbelow(3) for s in range(60)} == {0, 1, 2}
    with pytest.raises(InvalidArgument):
        a.randbelow(0)


def test_unique_matching():
    g = GridGraph(frozenset({Vertex(0, 0), Vertex(1, 0)}), frozenset({Edge.horizontal_at(0, 0)}))
    for seed in range(5):
        assert sample_matching(g, SamplerConfig(seed)).edges == {Edge.horizontal_at(0, 0)}


def test_no_matching():
    g = GridGraph(frozenset({Vertex(0, 0), Vertex(2, 0)}))
    with pytest.raises(NoPerfectMatching):
        sample_matching(g, SamplerConfig(0))


def test_determinism():
    g = to_grid_graph(build_direct((3, 1, 2, 2), 14))
    assert sample_matching(g, SamplerConfig(99)) == sample_matching(g, SamplerConfig(99))


def test_guardrail():
    g = diamond_graph(9)
    with pytest.raises(GuardrailExceeded):
        MatchingSampler(g).sample(SamplerConfig(0, max_count_guardrail=1000))


def test_exact_uniformity_small_graphs(rng):
    graphs = [to_grid_graph(build_direct((5, 2, 3, 4), 12)), diamond_graph(3), diamond_graph(5)]
    while len(graphs) < 25:
        g = to_grid_graph(random_closed(rng, 9))
        if count_matchings(g) <= 100:
            graphs.append(g)
    for g in graphs:
        sampler = MatchingSampler(g)
        total = count_matchings(g)
        assert sampler.total == total
        probs = [sampler.probability(m) for m in iter_matchings(g)]
        assert all(p == Fraction(1, total) for p in probs)
        assert sum(probs) == 1


def test_probability_rejects_non_matchings():
    g = diamond_graph(3)
    with pytest.raises(InvalidArgument):
        matching_probability(g, Matching(frozenset()))


def test_chi_square_on_small_example():
    g = to_grid_graph(build_direct((5, 2, 3, 4), 12))
    sampler = MatchingSampler(g)
    ms = enumerate_matchings(g)
    counts = Counter(sampler.sample(SamplerConfig(seed)) for seed in range(2800))
    assert set(counts) == set(ms)
    assert chisquare([counts[m] for m in ms]).pvalue > 0.001


def test_render_square():
    g = diamond_graph(1)
    m = Matching(frozenset({Edge.horizontal_at(0, 0), Edge.horizontal_at(0, 1)}))
    img = render_tiling(g, m, scale=10)
    assert (img.width, img.height) == (20, 20)
    rects = re.findall(r'<rect x="(\d+)" y="(\d+)" width="(\d+)" height="(\d+)" fill="([^"]+)"', img.svg_text)
    assert sorted(rects) == [("0", "0", "20", "10", "#d9534f"), ("0", "10", "20", "10", "#d9534f")]
    assert img.svg_text.startswith("<?xml")


def test_render_invariants(rng, tmp_path):
    for _ in range(10):
        g = to_grid_graph(random_closed(rng, 9))
        m = sample_matching(g, SamplerConfig(rng.randrange(2**64)))
        img = render_tiling(g, m)
        assert img.svg_text.count("<rect") == len(g.vertices) // 2
        assert render_tiling(g, m).svg_text == img.svg_text
    path = tmp_path / "t.svg"
    img.save(path)
    assert path.read_text(encoding="utf-8") == img.svg_text
    with pytest.raises(InvalidArgument):
        render_tiling(g, Matching(frozenset()))


def test_render_all_horizontal_matching():
    p = build_direct((3, 1, 2, 2), 10)
    g = to_grid_graph(p)
    edges = set()
    for h in p.ordinates:
        start, end = p.segment(h)
        edges |= {Edge.horizontal_at(x, h) for x in range(start, end, 2)}
    img = render_tiling(g, Matching(frozenset(edges)))
    assert "#428bca" not in img.svg_text
    assert img.svg_text.count("#d9534f") == len(edges)


def test_sample_somos4_render_size():
    g = to_grid_graph(build_direct((3, 1, 2, 2), 20))
    m = sample_matching(g, SamplerConfig(1))
    assert m.is_perfect_matching_of(g)
    assert render_tiling(g, m).svg_text.count("<rect") == len(g.vertices) // 2
