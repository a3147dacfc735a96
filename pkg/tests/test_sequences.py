from __future__ import annotations

import pytest

from pinecones.errors import IntegralityViolation, InvalidArgument, PolynomialityViolation
from pinecones.galerobinson import build_direct
from pinecones.matching import count_matchings
from pinecones.pinecone import to_grid_graph
from pinecones.polynomials import BivariatePoly
from pinecones.sequences import (
    cross_check_combinatorial,
    gr_poly_sequence,
    gr_sequence,
    somos_sequence,
)

from conftest import brute_count

W = BivariatePoly.monomial(1, 0, names=("w", "z"))
Z = BivariatePoly.monomial(0, 1, names=("w", "z"))


def test_sequence_examples():
    assert gr_sequence((1, 1, 1, 1), 5).terms == (1, 1, 2, 8, 64, 1024)
    assert gr_sequence((5, 2, 3, 4), 12)[12] == 14
    assert gr_sequence((6, 2, 5, 3), 25)[25] == 167741


def test_aztec_closed_form():
    seq = gr_sequence((1, 1, 1, 1), 12)
    assert list(seq.terms) == [2 ** (n * (n - 1) // 2) for n in range(13)]


def test_sequence_recurrence_holds():
    for params in [(3, 1, 2, 2), (4, 1, 3, 2), (5, 2, 3, 4), (7, 3, 6, 4)]:
        i, j, k, l = params
        m = i + j
        a = gr_sequence(params, 40).terms
        assert a[:m] == (1,) * m
        for n in range(m, 41):
            assert a[n] * a[n - m] == a[n - i] * a[n - j] + a[n - k] * a[n - l]
            assert a[n] > 0


def test_somos():
    assert somos_sequence(4, 7).terms == (1, 1, 1, 1, 2, 3, 7, 23)
    assert somos_sequence(5, 7).terms == (1, 1, 1, 1, 1, 2, 3, 5)
    with pytest.raises(InvalidArgument):
        somos_sequence(6, 10)


def test_bad_length():
    with pytest.raises(InvalidArgument):
        gr_sequence((3, 1, 2, 2), -1)


class _NotGaleRobinson:
    """a(n) a(n-4) = a(n-1)^2 + a(n-3)^2, which first leaves a remainder at n = 8."""

    i, j, k, l, m = 1, 1, 3, 3, 4


def test_inexact_division_is_reported(monkeypatch):
    import pinecones.sequences as seqmod

    monkeypatch.setattr(seqmod, "as_params", lambda p: _NotGaleRobinson)
    with pytest.raises(IntegralityViolation):
        gr_sequence((3, 1, 2, 2), 12)
    with pytest.raises(PolynomialityViolation):
        gr_poly_sequence((3, 1, 2, 2), 12)


def test_poly_sequence_examples():
    for params in [(3, 1, 2, 2), (4, 1, 3, 2), (5, 2, 3, 4), (1, 1, 1, 1)]:
        m = sum(params[:2])
        p = gr_poly_sequence(params, m)
        assert p[m] == W + Z
    p5 = gr_poly_sequence((3, 1, 2, 2), 5)[5]
    assert p5 == W * W + W * Z + Z
    assert str(p5) == "w^2 + w*z + z"


@pytest.mark.parametrize("params", [(3, 1, 2, 2), (4, 1, 3, 2), (5, 2, 3, 4), (1, 1, 1, 1), (6, 2, 5, 3)])
def test_poly_sequence_specializes_to_integers(params):
    polys = gr_poly_sequence(params, 20)
    ints = gr_sequence(params, 20)
    for n in range(21):
        assert polys[n].evaluate(1, 1) == ints[n]
        assert polys[n].min_coefficient() > 0


def test_cross_check_examples():
    assert cross_check_combinatorial((3, 1, 2, 2), 9)
    assert cross_check_combinatorial((4, 1, 3, 2), 9)
    assert cross_check_combinatorial((1, 1, 1, 1), 6)
    assert count_matchings(to_grid_graph(build_direct((1, 1, 1, 1), 6))) == 2**15


def test_somos4_counts_by_independent_counter():
    a = somos_sequence(4, 11)
    for n in range(12):
        assert brute_count(to_grid_graph(build_direct((3, 1, 2, 2), n))) == a[n]


@pytest.mark.parametrize("d", [2, 3])
def test_gcd_repetition_of_counts(d):
    base = gr_sequence((3, 1, 2, 2), 12)
    scaled = gr_sequence((3 * d, d, 2 * d, 2 * d), 12 * d)
    assert list(scaled.terms) == [base[N // d] for N in range(12 * d + 1)]


def test_bivariate_poly_arithmetic():
    p = BivariatePoly({(2, 0): 1, (1, 1): 3, (0, 0): -2})
    q = BivariatePoly({(1, 0): 1, (0, 1): 1})
    assert (p * q).divide_exact(q) == p
    assert (p * q).divide_exact(p) == q
    assert p - p == BivariatePoly()
    assert p * 1 == p and (p * 0).is_zero
    assert BivariatePoly.constant(3) == 3
    with pytest.raises(PolynomialityViolation):
        (p * q + BivariatePoly.constant(1)).divide_exact(q)
    assert p.substitute_squares() == BivariatePoly({(4, 0): 1, (2, 2): 3, (0, 0): -2})
    assert p.evaluate(2, 5) == 4 + 30 - 2
    assert q.to_json() == {"u^1 v^0": 1, "u^0 v^1": 1}
    assert q.renamed(("w", "z")).to_json() == {"w^1 z^0": 1, "w^0 z^1": 1}
    assert p.leading() == ((2, 0), 1)
