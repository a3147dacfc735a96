"""Gale-Robinson recurrences over the integers and over Z[w, z].

    a(n) a(n-m) = a(n-i) a(n-j) + a(n-k) a(n-l),        a(n) = 1 for n < m
    p(n) p(n-m) = w p(n-i) p(n-j) + z p(n-k) p(n-l),    p(n) = 1 for n < m

Every division is checked; a remainder means a bug, not bad input.
"""

from __future__ import annotations

from dataclasses import dataclass

from .condensation import bivariate_q
from .errors import IntegralityViolation, InvalidArgument, PolynomialityViolation
from .galerobinson import GRParams, ParamsLike, as_params, build_direct
from .matching import count_matchings
from .pinecone import to_grid_graph
from .polynomials import BivariatePoly

__all__ = [
    "GRSequence",
    "GRPolySequence",
    "CrossCheck",
    "gr_sequence",
    "gr_poly_sequence",
    "cross_check_combinatorial",
    "somos_sequence",
    "SOMOS_PARAMS",
]

SOMOS_PARAMS = {4: (3, 1, 2, 2), 5: (4, 1, 3, 2)}


@dataclass(frozen=True)
class GRSequence:
    params: GRParams
    terms: tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        return self.terms[n]

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class GRPolySequence:
    params: GRParams
    terms: tuple[BivariatePoly, ...]

    def __getitem__(self, n: int) -> BivariatePoly:
        return self.terms[n]

    def __len__(self) -> int:
        return len(self.terms)


def _check_length(N: int) -> None:
    if not isinstance(N, int) or N < 0:
        raise InvalidArgument(f"N must be a nonnegative integer, got {N!r}")


def gr_sequence(params: ParamsLike, N: int) -> GRSequence:
    """a(0..N)."""
    p = as_params(params)
    _check_length(N)
    a: list[int] = []
    for n in range(N + 1):
        if n < p.m:
            a.append(1)
            continue
        num = a[n - p.i] * a[n - p.j] + a[n - p.k] * a[n - p.l]
        q, r = divmod(num, a[n - p.m])
        if r:
            raise IntegralityViolation(f"a({n}) of {p}: remainder {r} dividing by a({n - p.m})")
        if q <= 0:
            raise IntegralityViolation(f"a({n}) of {p} is not positive")
        a.append(q)
    return GRSequence(p, tuple(a))


def gr_poly_sequence(params: ParamsLike, N: int) -> GRPolySequence:
    """p(0..N) in Z[w, z]."""
    p = as_params(params)
    _check_length(N)
    names = ("w", "z")
    w = BivariatePoly.monomial(1, 0, names=names)
    z = BivariatePoly.monomial(0, 1, names=names)
    out: list[BivariatePoly] = []
    for n in range(N + 1):
        if n < p.m:
            out.append(BivariatePoly.constant(1, names))
            continue
        num = w * out[n - p.i] * out[n - p.j] + z * out[n - p.k] * out[n - p.l]
        term = num.divide_exact(out[n - p.m])
        if term.min_coefficient() < 0:
            raise PolynomialityViolation(f"p({n}) of {p} has a negative coefficient")
        out.append(term)
    return GRPolySequence(p, tuple(out))


@dataclass(frozen=True)
class CrossCheck:
    ok: bool
    first_mismatch: int | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def cross_check_combinatorial(params: ParamsLike, N: int) -> CrossCheck:
    """m(P(n)) = a(n) and q(n; u, v) = p(n; u^2, v^2) for every n <= N."""
    p = as_params(params)
    a = gr_sequence(p, N)
    polys = gr_poly_sequence(p, N)
    for n in range(N + 1):
        pine = build_direct(p, n)
        count = count_matchings(to_grid_graph(pine))
        if count != a[n]:
            return CrossCheck(False, n, f"m(P({n})) = {count} but a({n}) = {a[n]}")
        q = bivariate_q(pine)
        expected = polys[n].substitute_squares(("u", "v"))
        if q != expected:
            return CrossCheck(False, n, f"q({n}) = {q} but p({n}; u^2, v^2) = {expected}")
    return CrossCheck(True)


def somos_sequence(k: int, N: int) -> GRSequence:
    """Somos-4 or Somos-5 as Gale-Robinson sequences."""
    if k not in SOMOS_PARAMS:
        raise InvalidArgument(f"only Somos-4 and Somos-5 are three-term recurrences, got Somos-{k}")
    return gr_sequence(SOMOS_PARAMS[k], N)
